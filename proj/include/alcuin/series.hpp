#pragma once

/**
 * @file series.hpp
 * @brief Coefficients of x^3 / ((1 - x^2)(1 - x^3)(1 - x^4)).
 *
 * Two independent routes to the same numbers:
 *  - a coin-change style DP counting (x, y, z) >= 0 with 2x + 3z + 4y = m,
 *    whose value at m = p - 3 is the coefficient of x^p;
 *  - the truncated Cauchy product of x/(1-x^2), x/(1-x^3) and x/(1-x^4).
 *
 * product_check() compares the two.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "alcuin/core_math.hpp"

namespace alcuin::series {

/// Power series with coefficients for degrees 0..degree(); higher terms are dropped.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree) : coeffs_(degree + 1, 0) {}
    explicit TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least one coefficient");
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    Int operator[](std::size_t d) const { return coeffs_[d]; }
    Int& operator[](std::size_t d) { return coeffs_[d]; }
    std::span<const Int> coefficients() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Int> coeffs_;
};

struct CoefficientTable {
    std::size_t max_index = 0;
    std::vector<Int> coefficients;
};

/// Cauchy product truncated at the common degree.
inline TruncatedSeries series_multiply(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    if (lhs.degree() != rhs.degree())
        throw std::invalid_argument("series_multiply needs equal truncation degrees");
    const std::size_t n = lhs.degree();
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (rhs[j] == 0) continue;
            out[i + j] = checked_add(out[i + j], checked_mul(lhs[i], rhs[j]));
        }
    }
    return out;
}

/// x / (1 - x^k) = x + x^(k+1) + x^(2k+1) + ..., truncated at `degree`.
inline TruncatedSeries geometric_series(std::size_t k, std::size_t degree) {
    if (k < 1) throw std::invalid_argument("geometric_series needs k >= 1");
    TruncatedSeries out(degree);
    for (std::size_t d = 1; d <= degree; d += k) out[d] = 1;
    return out;
}

/// ways[m] = number of (x, y, z) >= 0 with 2x + 3z + 4y = m, for m in 0..max_m.
inline std::vector<Int> representation_table(std::size_t max_m) {
    std::vector<Int> ways(max_m + 1, 0);
    ways[0] = 1;
    // parts outermost: each part size contributes one multiplicity
    for (const std::size_t part : {2u, 3u, 4u}) {
        for (std::size_t amount = part; amount <= max_m; ++amount)
            ways[amount] = checked_add(ways[amount], ways[amount - part]);
    }
    return ways;
}

inline Int representation_count(std::size_t m) { return representation_table(m)[m]; }

/// coefficients[p] = T(p) for p in 0..max_index.
inline CoefficientTable alcuin_coefficients(std::size_t max_index) {
    CoefficientTable table{max_index, std::vector<Int>(max_index + 1, 0)};
    if (max_index < 3) return table;
    const auto ways = representation_table(max_index - 3);
    for (std::size_t p = 3; p <= max_index; ++p) table.coefficients[p] = ways[p - 3];
    return table;
}

/// Lowest degree where the three-factor product and the DP table disagree.
inline std::optional<std::size_t> first_product_mismatch(std::size_t degree) {
    const auto product = series_multiply(series_multiply(geometric_series(2, degree), geometric_series(3, degree)),
                                         geometric_series(4, degree));
    const auto table = alcuin_coefficients(degree);
    for (std::size_t d = 0; d <= degree; ++d)
        if (product[d] != table.coefficients[d]) return d;
    return std::nullopt;
}

inline bool product_check(std::size_t degree) { return !first_product_mismatch(degree).has_value(); }

} // namespace alcuin::series
