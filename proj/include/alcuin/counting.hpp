#pragma once

/**
 * @file counting.hpp
 * @brief Five independent ways to compute T(p), the number of integer
 * triangles with perimeter p, and two ways to list them.
 *
 *   ClosedForm    nearest integer of p^2/48 (p even) or (p+3)^2/48 (p odd)
 *   Mod12         3n^2 + k1*n + k0 with p = 12n + r, (k1, k0) looked up by r
 *   BijectionSum  sum over the largest side c of the admissible smallest sides a
 *   Series        coefficient of x^p in x^3 / ((1-x^2)(1-x^3)(1-x^4))
 *   BruteForce    direct scan over a <= b <= c; the reference for the others
 *
 * All methods accept p = 0 and return T(0) = 0.
 */

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcuin/core_math.hpp"
#include "alcuin/series.hpp"

namespace alcuin {

enum class CountMethod { ClosedForm, Mod12, BijectionSum, Series, BruteForce };

inline constexpr std::array<CountMethod, 5> kAllMethods{CountMethod::ClosedForm, CountMethod::Mod12,
                                                        CountMethod::BijectionSum, CountMethod::Series,
                                                        CountMethod::BruteForce};

constexpr std::string_view method_name(CountMethod m) {
    switch (m) {
    case CountMethod::ClosedForm: return "closed-form";
    case CountMethod::Mod12: return "mod12";
    case CountMethod::BijectionSum: return "bijection-sum";
    case CountMethod::Series: return "series";
    case CountMethod::BruteForce: return "brute-force";
    }
    return "unknown";
}

/// Case-insensitive; '-' and '_' are ignored, so "ClosedForm", "closed_form"
/// and "closed-form" all parse.
inline std::optional<CountMethod> parse_method(std::string_view text) {
    std::string key;
    for (const char ch : text) {
        if (ch == '-' || ch == '_') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    for (const auto m : kAllMethods) {
        std::string canon;
        for (const char ch : method_name(m))
            if (ch != '-') canon.push_back(ch);
        if (key == canon) return m;
    }
    return std::nullopt;
}

/// T(12n + r) = 3n^2 + k1*n + k0.
struct Mod12Row {
    int residue;
    int k1;
    int k0;
};

inline constexpr std::array<Mod12Row, 12> kMod12Table{{
    {0, 0, 0},
    {1, 2, 0},
    {2, 1, 0},
    {3, 3, 1},
    {4, 2, 0},
    {5, 4, 1},
    {6, 3, 1},
    {7, 5, 2},
    {8, 4, 1},
    {9, 6, 3},
    {10, 5, 2},
    {11, 7, 4},
}};

inline Int count_closed_form(Int p) {
    require_perimeter(p);
    const Int base = p % 2 == 0 ? p : checked_add(p, 3);
    return nearest_int(Rational(checked_mul(base, base), 48));
}

inline Int count_mod12(Int p) {
    require_perimeter(p);
    const auto [modulus, n, r] = decompose(p, 12);
    const Mod12Row& row = kMod12Table[static_cast<std::size_t>(r)];
    return checked_add(checked_add(checked_mul(3, checked_mul(n, n)), checked_mul(row.k1, n)), row.k0);
}

/// Largest side c runs over [ceil(p/3), floor((p-1)/2)]; for each c the
/// smallest side a runs over [p - 2c, floor((p-c)/2)].
inline Int count_sum(Int p) {
    require_perimeter(p);
    const Int lo = ceil_rat(Rational(p, 3));
    const Int hi = floor_rat(Rational(p - 1, 2));
    Int total = 0;
    for (Int c = lo; c <= hi; ++c)
        total = checked_add(total, floor_rat(Rational(p - c, 2)) - (p - 2 * c) + 1);
    return total;
}

inline Int count_bruteforce(Int p) {
    require_perimeter(p);
    // the O(p^2) scan runs on 64-bit integers; larger p would never finish anyway
    if (p > std::numeric_limits<std::int64_t>::max() / 4)
        throw RangeError("brute force count supports p <= 2^61, got " + to_string(p));
    const auto q = static_cast<std::int64_t>(p);
    std::int64_t n = 0;
    for (std::int64_t a = 1; a <= q / 3; ++a) {
        for (std::int64_t b = a; b <= (q - a) / 2; ++b) {
            const std::int64_t c = q - a - b;
            if (b <= c && a + b > c) ++n;
        }
    }
    return n;
}

inline Int count(Int p, CountMethod method) {
    switch (method) {
    case CountMethod::ClosedForm: return count_closed_form(p);
    case CountMethod::Mod12: return count_mod12(p);
    case CountMethod::BijectionSum: return count_sum(p);
    case CountMethod::Series: {
        require_perimeter(p);
        const auto index = static_cast<std::size_t>(p);
        return series::alcuin_coefficients(index).coefficients[index];
    }
    case CountMethod::BruteForce: return count_bruteforce(p);
    }
    throw std::invalid_argument("unknown count method");
}

/// All triangles of perimeter p, lexicographic in (a, b, c).
inline std::vector<TriangleTriple> enumerate_triples(Int p) {
    require_perimeter(p);
    std::vector<TriangleTriple> out;
    for (Int a = 1; a <= p / 3; ++a) {
        for (Int b = a; b <= (p - a) / 2; ++b) {
            const Int c = p - a - b;
            if (b <= c && a + b > c) out.push_back(make_triple(a, b, c));
        }
    }
    return out;
}

/// Triangles generated from the (c, a) parameterization, in order of
/// increasing c then increasing a. Same set as enumerate_triples().
inline std::vector<TriangleTriple> enumerate_bijection(Int p) {
    require_perimeter(p);
    std::vector<TriangleTriple> out;
    const Int lo = ceil_rat(Rational(p, 3));
    const Int hi = floor_rat(Rational(p - 1, 2));
    for (Int c = lo; c <= hi; ++c) {
        for (Int a = p - 2 * c; a <= floor_rat(Rational(p - c, 2)); ++a) out.push_back(make_triple(a, p - a - c, c));
    }
    return out;
}

} // namespace alcuin
