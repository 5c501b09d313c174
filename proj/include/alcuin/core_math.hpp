#pragma once

/**
 * @file core_math.hpp
 * @brief Exact integer building blocks.
 *
 * Everything in the library is computed on a signed 128-bit integer. Products
 * that can grow with the fourth power of the perimeter go through the checked
 * helpers below, which throw RangeError instead of wrapping.
 *
 * Floor, ceiling and nearest-integer act on a Rational (numerator over a
 * positive denominator). Nearest-integer rounds exact halves away from zero;
 * the triangle-count formulas never produce a half, so the tie rule only has
 * to be deterministic.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace alcuin {

using Int = __int128;

inline constexpr Int kIntMax = static_cast<Int>(~static_cast<unsigned __int128>(0) >> 1);
inline constexpr Int kIntMin = -kIntMax - 1;

/// Thrown when an exact result does not fit in Int.
class RangeError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Thrown when three lengths do not form a non-degenerate triangle.
class NotATriangle : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline std::string to_string(Int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // work on the magnitude as unsigned so kIntMin does not overflow
    auto mag = negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(value)
                        : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

inline Int checked_add(Int lhs, Int rhs) {
    Int out;
    if (__builtin_add_overflow(lhs, rhs, &out))
        throw RangeError("integer overflow in " + to_string(lhs) + " + " + to_string(rhs));
    return out;
}

inline Int checked_sub(Int lhs, Int rhs) {
    Int out;
    if (__builtin_sub_overflow(lhs, rhs, &out))
        throw RangeError("integer overflow in " + to_string(lhs) + " - " + to_string(rhs));
    return out;
}

inline Int checked_mul(Int lhs, Int rhs) {
    Int out;
    if (__builtin_mul_overflow(lhs, rhs, &out))
        throw RangeError("integer overflow in " + to_string(lhs) + " * " + to_string(rhs));
    return out;
}

/// Rejects negative perimeters. Zero is allowed and counts as "no triangle".
inline void require_perimeter(Int p) {
    if (p < 0) throw std::invalid_argument("perimeter must be non-negative, got " + to_string(p));
}

/// A numerator over a positive denominator. Not reduced; equality compares values.
class Rational {
public:
    constexpr Rational(Int numerator, Int denominator = 1) : num_(numerator), den_(denominator) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        if (den_ < 0) {
            if (num_ == kIntMin || den_ == kIntMin) throw RangeError("rational sign normalization overflows");
            num_ = -num_;
            den_ = -den_;
        }
    }

    constexpr Int numerator() const { return num_; }
    constexpr Int denominator() const { return den_; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return checked_mul(lhs.num_, rhs.den_) == checked_mul(rhs.num_, lhs.den_);
    }

private:
    Int num_;
    Int den_;
};

/// Greatest integer <= q (rounds toward negative infinity, not toward zero).
constexpr Int floor_rat(const Rational& q) {
    const Int n = q.numerator();
    const Int d = q.denominator();
    Int quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

/// Least integer >= q.
constexpr Int ceil_rat(const Rational& q) {
    const Int n = q.numerator();
    const Int d = q.denominator();
    Int quot = n / d;
    if (n % d != 0 && n > 0) ++quot;
    return quot;
}

/// Closest integer to q; exact halves round away from zero.
inline Int nearest_int(const Rational& q) {
    const Int n = q.numerator();
    const Int d = q.denominator();
    // |q| + 1/2 = (2|n| + d) / 2d, floored
    const Int mag = n < 0 ? checked_sub(0, n) : n;
    const Int rounded = checked_add(checked_mul(2, mag), d) / checked_mul(2, d);
    return n < 0 ? -rounded : rounded;
}

struct ResidueDecomposition {
    Int modulus;
    Int quotient;
    Int residue;

    friend bool operator==(const ResidueDecomposition&, const ResidueDecomposition&) = default;
};

/// Euclidean division p = m*n + r with 0 <= r < m.
inline ResidueDecomposition decompose(Int p, Int m) {
    if (p < 0) throw std::invalid_argument("decompose expects p >= 0, got " + to_string(p));
    if (m < 1) throw std::invalid_argument("decompose expects modulus >= 1, got " + to_string(m));
    return {m, p / m, p % m};
}

/// Side lengths a <= b <= c with a + b > c. Only make_triple can build one.
class TriangleTriple {
public:
    constexpr Int a() const { return a_; }
    constexpr Int b() const { return b_; }
    constexpr Int c() const { return c_; }
    constexpr Int perimeter() const { return a_ + b_ + c_; }
    constexpr std::array<Int, 3> sides() const { return {a_, b_, c_}; }

    friend constexpr auto operator<=>(const TriangleTriple&, const TriangleTriple&) = default;

    friend TriangleTriple make_triple(Int a, Int b, Int c);

private:
    constexpr TriangleTriple(Int a, Int b, Int c) : a_(a), b_(b), c_(c) {}

    Int a_;
    Int b_;
    Int c_;
};

/// Sorts the sides ascending and checks the strict triangle inequality.
inline TriangleTriple make_triple(Int a, Int b, Int c) {
    std::array<Int, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    if (s[0] <= 0)
        throw NotATriangle("side lengths must be positive: (" + to_string(a) + ", " + to_string(b) + ", " +
                           to_string(c) + ")");
    if (checked_add(s[0], s[1]) <= s[2])
        throw NotATriangle("(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) +
                           ") violates the strict triangle inequality");
    // perimeter() is unchecked, so reject triples whose perimeter does not fit
    checked_add(checked_add(s[0], s[1]), s[2]);
    return TriangleTriple(s[0], s[1], s[2]);
}

inline std::ostream& operator<<(std::ostream& os, const TriangleTriple& t) {
    return os << '(' << to_string(t.a()) << ", " << to_string(t.b()) << ", " << to_string(t.c()) << ')';
}

} // namespace alcuin
