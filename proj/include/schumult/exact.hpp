#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schumult/errors.hpp"

namespace schumult {

/// Exact signed integer of unbounded magnitude. Every determinant and
/// multiplicity in this library is an Integer; nothing is ever rounded.
using Integer = boost::multiprecision::cpp_int;

/// Binomial coefficient with the zero convention outside 0 <= k <= n:
/// returns n!/(k!(n-k)!) for 0 <= k <= n and 0 in every other case
/// (k < 0, n < 0, or k > n). In particular binomial(-s,-s) == 0 for s > 0
/// while binomial(0,0) == 1. The determinant formulas evaluated here rely
/// on exactly this convention for their out-of-range entries.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (std::int64_t t = 1; t <= k; ++t) {
        result *= n - k + t;
        result /= t; // exact: t consecutive integers contain a multiple of t
    }
    return result;
}

/// Square matrix of Integers, row-major. Order 0 (empty matrix) is allowed.
class IntMatrix {
public:
    IntMatrix() = default;

    explicit IntMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    /// Build from explicit rows; every row must have size rows.size().
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<Integer>> rows) {
        IntMatrix m(rows.size());
        std::size_t p = 0;
        for (const auto& row : rows) {
            if (row.size() != m.order_)
                throw Error(Errc::bad_dimensions, "matrix rows must be square");
            std::size_t q = 0;
            for (const auto& e : row) m.at(p, q++) = e;
            ++p;
        }
        return m;
    }

    std::size_t order() const noexcept { return order_; }

    Integer& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
    const Integer& at(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < order_; ++c) std::swap(at(a, c), at(b, c));
    }

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t order_ = 0;
    std::vector<Integer> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Pivoting uses
/// the first nonzero entry in column order; a row swap flips the sign.
/// The empty matrix has determinant 1.
inline Integer determinant(IntMatrix m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            m.swap_rows(pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // exact division: the quotient is a minor of the original matrix
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            }
        }
        prev = m.at(k, k);
    }
    Integer det = m.at(n - 1, n - 1);
    return sign < 0 ? Integer(-det) : det;
}

namespace detail {

inline Integer det_cofactor_rec(const IntMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.empty()) return 1;
    if (cols.size() == 1) return m.at(row, cols[0]);
    Integer total = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Integer& e = m.at(row, cols[k]);
        if (e == 0) continue;
        std::size_t removed = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        Integer minor = det_cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), removed);
        if (k % 2 == 0)
            total += e * minor;
        else
            total -= e * minor;
    }
    return total;
}

} // namespace detail

/// Determinant by Laplace (cofactor) expansion. Test oracle, independent of
/// the Bareiss path. Guarded to order <= 10 because of the factorial cost.
inline Integer determinant_cofactor(const IntMatrix& m) {
    if (m.order() > 10)
        throw Error(Errc::size_guard, "cofactor determinant limited to order <= 10, got " +
                                          std::to_string(m.order()));
    std::vector<std::size_t> cols(m.order());
    for (std::size_t c = 0; c < m.order(); ++c) cols[c] = c;
    return detail::det_cofactor_rec(m, cols, 0);
}

} // namespace schumult
