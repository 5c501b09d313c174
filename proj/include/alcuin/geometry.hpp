#pragma once

/**
 * @file geometry.hpp
 * @brief Exact Heron areas and the maximum-area triangle of a given perimeter.
 *
 * Areas are carried as the integers 16*E^2 and 432*E^2, never as floating
 * point. For p = 3n + v with v in {-1, 0, 1}, the widest triangle is the one
 * whose sides differ by at most one, and
 *
 *     432 * E^2 = (p + 2v)^2 * (p - 4v) * p.
 */

#include <stdexcept>
#include <vector>

#include "alcuin/core_math.hpp"
#include "alcuin/counting.hpp"

namespace alcuin {

class NoTriangle : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class HypothesisViolated : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// (a+b+c)(-a+b+c)(a-b+c)(a+b-c), sixteen times the squared area.
struct AreaSquared16 {
    Int value;

    friend auto operator<=>(const AreaSquared16&, const AreaSquared16&) = default;
};

struct MaxAreaResult {
    TriangleTriple triple;
    int v;            // p = 3n + v, v in {-1, 0, 1}
    Int area_sq_432;  // 432 * E^2
};

inline AreaSquared16 heron_16esq(const TriangleTriple& t) {
    const Int a = t.a(), b = t.b(), c = t.c();
    const Int value = checked_mul(checked_mul(t.perimeter(), -a + b + c), checked_mul(a - b + c, a + b - c));
    return {value};
}

/// Largest side minus smallest side.
inline Int range_of(const TriangleTriple& t) { return t.c() - t.a(); }

inline MaxAreaResult max_area_triple(Int p) {
    require_perimeter(p);
    if (p == 4)
        throw NoTriangle("no triangle exists with perimeter 4: the candidate (1, 1, 2) is degenerate "
                         "(the area formula gives 0 there)");
    if (p < 3) throw NoTriangle("no triangle exists with perimeter " + to_string(p));

    const Int n = p / 3;
    int v = 0;
    TriangleTriple triple = make_triple(n, n, n);
    switch (static_cast<int>(p % 3)) {
    case 1:
        v = 1;
        triple = make_triple(n, n, n + 1);
        break;
    case 2:
        v = -1;
        triple = make_triple(n, n + 1, n + 1);
        break;
    default: break;
    }
    const Int plus = checked_add(p, 2 * v);
    const Int minus = checked_sub(p, 4 * v);
    const Int area = checked_mul(checked_mul(checked_mul(plus, plus), minus), p);
    return {triple, v, area};
}

/// Scans every triangle of perimeter p for the largest 16*E^2. A tie for the
/// maximum is a logic error.
inline TriangleTriple area_argmax_bruteforce(Int p) {
    const auto triples = enumerate_triples(p);
    if (triples.empty()) throw NoTriangle("no triangle exists with perimeter " + to_string(p));
    const TriangleTriple* best = &triples.front();
    AreaSquared16 best_area = heron_16esq(*best);
    bool tied = false;
    for (const auto& t : triples) {
        if (&t == best) continue;
        const auto area = heron_16esq(t);
        if (area > best_area) {
            best = &t;
            best_area = area;
            tied = false;
        } else if (area == best_area) {
            tied = true;
        }
    }
    if (tied) throw std::logic_error("area maximum is not unique for perimeter " + to_string(p));
    return *best;
}

/// For two triangles of equal perimeter sharing their middle side: the first
/// has strictly smaller area exactly when it has strictly larger range.
inline bool range_lemma_holds(const TriangleTriple& t1, const TriangleTriple& t2) {
    if (t1.perimeter() != t2.perimeter())
        throw HypothesisViolated("range lemma needs equal perimeters, got " + to_string(t1.perimeter()) + " and " +
                                 to_string(t2.perimeter()));
    if (t1.b() != t2.b())
        throw HypothesisViolated("range lemma needs equal middle sides, got " + to_string(t1.b()) + " and " +
                                 to_string(t2.b()));
    const bool smaller_area = heron_16esq(t1) < heron_16esq(t2);
    const bool larger_range = range_of(t1) > range_of(t2);
    return smaller_area == larger_range;
}

} // namespace alcuin
