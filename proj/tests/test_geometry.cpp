#include <gtest/gtest.h>

#include "alcuin/geometry.hpp"
#include "oracles.hpp"

using alcuin::Int;
using alcuin::make_triple;

TEST(Geometry, HeronExamples) {
    EXPECT_TRUE(alcuin::heron_16esq(make_triple(3, 4, 5)).value == 576);
    EXPECT_TRUE(alcuin::heron_16esq(make_triple(1, 1, 1)).value == 3);
    EXPECT_TRUE(alcuin::heron_16esq(make_triple(2, 2, 3)).value == 63);
}

TEST(Geometry, HeronMatchesSemiperimeterForm) {
    for (std::int64_t p = 3; p <= 120; ++p)
        for (const auto& s : oracle::triangles(p)) {
            const auto value = alcuin::heron_16esq(make_triple(s[0], s[1], s[2])).value;
            ASSERT_TRUE(value == oracle::heron16(s[0], s[1], s[2]));
            ASSERT_GT(static_cast<long long>(value), 0);
        }
}

TEST(Geometry, HeronOverflowIsReported) {
    const Int side = Int{1} << 40;
    EXPECT_THROW(alcuin::heron_16esq(make_triple(side, side, side)), alcuin::RangeError);
}

TEST(Geometry, RangeExamples) {
    EXPECT_TRUE(alcuin::range_of(make_triple(5, 5, 5)) == 0);
    EXPECT_TRUE(alcuin::range_of(make_triple(2, 2, 3)) == 1);
    EXPECT_TRUE(alcuin::range_of(make_triple(2, 4, 4)) == 2);
}

TEST(Geometry, MaxAreaExamples) {
    const auto three = alcuin::max_area_triple(3);
    EXPECT_EQ(three.triple, make_triple(1, 1, 1));
    EXPECT_EQ(three.v, 0);
    EXPECT_TRUE(three.area_sq_432 == 81);

    const auto seven = alcuin::max_area_triple(7);
    EXPECT_EQ(seven.triple, make_triple(2, 2, 3));
    EXPECT_EQ(seven.v, 1);
    EXPECT_TRUE(seven.area_sq_432 == 1701);
    EXPECT_TRUE(27 * alcuin::heron_16esq(seven.triple).value == 1701);

    const auto eight = alcuin::max_area_triple(8);
    EXPECT_EQ(eight.triple, make_triple(2, 3, 3));
    EXPECT_EQ(eight.v, -1);
    EXPECT_TRUE(eight.area_sq_432 == 3456);
    EXPECT_TRUE(27 * alcuin::heron_16esq(eight.triple).value == 3456);
}

TEST(Geometry, MaxAreaRejectsPerimetersWithoutTriangles) {
    for (const Int p : {0, 1, 2, 4}) EXPECT_THROW(alcuin::max_area_triple(p), alcuin::NoTriangle);
    try {
        alcuin::max_area_triple(4);
        FAIL();
    } catch (const alcuin::NoTriangle& e) {
        EXPECT_NE(std::string(e.what()).find("(1, 1, 2)"), std::string::npos);
    }
    EXPECT_THROW(alcuin::max_area_triple(-3), std::invalid_argument);
}

TEST(Geometry, ArgmaxBruteForceExamples) {
    EXPECT_EQ(alcuin::area_argmax_bruteforce(12), make_triple(4, 4, 4));
    EXPECT_EQ(alcuin::area_argmax_bruteforce(10), make_triple(3, 3, 4));
    EXPECT_THROW(alcuin::area_argmax_bruteforce(2), alcuin::NoTriangle);
    EXPECT_THROW(alcuin::area_argmax_bruteforce(4), alcuin::NoTriangle);
}

TEST(Geometry, ClosedFormArgmaxAgainstOracleScan) {
    for (std::int64_t p = 3; p <= 300; ++p) {
        if (p == 4) continue;
        // unique maximum of the semiperimeter-form area over the oracle's triangles
        Int best = -1;
        int ties = 0;
        oracle::Sides arg{};
        for (const auto& s : oracle::triangles(p)) {
            const Int v = oracle::heron16(s[0], s[1], s[2]);
            if (v > best) {
                best = v;
                arg = s;
                ties = 0;
            } else if (v == best) {
                ++ties;
            }
        }
        ASSERT_EQ(ties, 0) << p;
        const auto result = alcuin::max_area_triple(p);
        ASSERT_EQ(result.triple, make_triple(arg[0], arg[1], arg[2])) << p;
        ASSERT_TRUE(27 * best == result.area_sq_432) << p;
        ASSERT_LE(static_cast<long long>(alcuin::range_of(result.triple)), 1);
        const Int v = result.v;
        ASSERT_TRUE((p - v) % 3 == 0);
        ASSERT_TRUE(result.area_sq_432 == (p + 2 * v) * (p + 2 * v) * (p - 4 * v) * p);
    }
}

TEST(Geometry, MinRangeIsMaxArea) {
    for (Int p = 3; p <= 400; ++p) {
        if (p == 4) continue;
        const auto triples = alcuin::enumerate_triples(p);
        const auto best = alcuin::area_argmax_bruteforce(p);
        for (const auto& t : triples)
            if (t != best) {
                ASSERT_GT(alcuin::range_of(t), alcuin::range_of(best)) << static_cast<long long>(p);
            }
    }
}

TEST(Geometry, EquilateralCeiling) {
    for (Int n = 1; n <= 150; ++n) {
        const auto eq = make_triple(n, n, n);
        ASSERT_TRUE(alcuin::heron_16esq(eq).value == 3 * n * n * n * n);
        for (const auto& t : alcuin::enumerate_triples(3 * n))
            if (t != eq) {
                ASSERT_LT(alcuin::heron_16esq(t), alcuin::heron_16esq(eq));
            }
    }
}

TEST(Geometry, RangeLemmaHypothesis) {
    EXPECT_THROW(alcuin::range_lemma_holds(make_triple(1, 3, 3), make_triple(2, 3, 2)), alcuin::HypothesisViolated);
    EXPECT_THROW(alcuin::range_lemma_holds(make_triple(2, 4, 4), make_triple(3, 4, 3)), alcuin::HypothesisViolated);
    EXPECT_THROW(alcuin::range_lemma_holds(make_triple(3, 3, 3), make_triple(3, 3, 4)), alcuin::HypothesisViolated);
    EXPECT_THROW(make_triple(1, 5, 6), alcuin::NotATriangle);
}

TEST(Geometry, RangeLemmaSharedMiddleSide) {
    for (Int p = 3; p <= 150; ++p) {
        const auto triples = alcuin::enumerate_triples(p);
        for (const auto& t1 : triples)
            for (const auto& t2 : triples)
                if (t1.b() == t2.b()) {
                    ASSERT_TRUE(alcuin::range_lemma_holds(t1, t2)) << t1 << " " << t2;
                }
    }
}

TEST(Geometry, RangeLemmaFixedBase) {
    // (x, m, y) with m fixed and x + y = p - m: smaller |x - y| means larger area
    for (Int p = 3; p <= 120; ++p) {
        for (Int m = 1; m < p; ++m) {
            std::vector<std::pair<Int, Int>> pairs;  // (|x - y|, 16E^2)
            for (Int x = 1; x < p - m; ++x) {
                const Int y = p - m - x;
                if (x > y) break;
                try {
                    pairs.emplace_back(y - x, alcuin::heron_16esq(make_triple(x, m, y)).value);
                } catch (const alcuin::NotATriangle&) {
                }
            }
            for (const auto& [r1, e1] : pairs)
                for (const auto& [r2, e2] : pairs)
                    if (r1 < r2) {
                        ASSERT_GT(e1, e2);
                    }
        }
    }
}
