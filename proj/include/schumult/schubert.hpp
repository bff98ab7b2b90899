#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schumult/exact.hpp"

namespace schumult {

/// A problem instance: the pair (i, j) inside Gr_d of an n-space.
/// Both index vectors are strictly increasing in [1, n] and j <= i
/// componentwise. Construct through validate().
struct SchubertDatum {
    int n = 0;
    int d = 0;
    std::vector<int> i;
    std::vector<int> j;

    bool operator==(const SchubertDatum&) const = default;
};

using SVector = std::vector<int>;

namespace detail {

inline std::string vec_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(v[k]);
    }
    return s;
}

inline void check_index_vector(const char* name, const std::vector<int>& v, int n, int d) {
    if (static_cast<int>(v.size()) != d)
        throw Error(Errc::bad_dimensions, std::string(name) + " has " + std::to_string(v.size()) +
                                              " entries, expected d=" + std::to_string(d));
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k - 1] >= v[k])
            throw Error(Errc::not_strictly_increasing,
                        std::string(name) + "[" + std::to_string(k) + "]=" + std::to_string(v[k - 1]) +
                            " >= " + name + "[" + std::to_string(k + 1) + "]=" + std::to_string(v[k]));
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] < 1 || v[k] > n)
            throw Error(Errc::out_of_range, std::string(name) + "[" + std::to_string(k + 1) + "]=" +
                                                std::to_string(v[k]) + " outside [1," + std::to_string(n) + "]");
}

} // namespace detail

/// Validates (n, d, i, j) and returns the datum, or throws a structured
/// error naming the offending entry. d = 0 is rejected.
inline SchubertDatum validate(int n, int d, const std::vector<int>& i, const std::vector<int>& j) {
    if (n < 1) throw Error(Errc::bad_dimensions, "n=" + std::to_string(n) + " must be positive");
    if (d < 1 || d > n)
        throw Error(Errc::bad_dimensions, "d=" + std::to_string(d) + " outside [1," + std::to_string(n) + "]");
    detail::check_index_vector("i", i, n, d);
    detail::check_index_vector("j", j, n, d);
    for (int k = 0; k < d; ++k)
        if (j[k] > i[k])
            throw Error(Errc::not_dominated, "j[" + std::to_string(k + 1) + "]=" + std::to_string(j[k]) +
                                                 " > i[" + std::to_string(k + 1) + "]=" + std::to_string(i[k]));
    return SchubertDatum{n, d, i, j};
}

/// s_q = |{l : i_q < j_l}|, q = 1..d. Weakly decreasing with s_d = 0.
inline SVector s_vector(const SchubertDatum& datum) {
    SVector s(datum.d, 0);
    for (int q = 0; q < datum.d; ++q)
        for (int l = 0; l < datum.d; ++l)
            if (datum.i[q] < datum.j[l]) ++s[q];
    return s;
}

/// True iff j = (1, 2, ..., d), the special case of the second formula.
inline bool is_special_case(const SchubertDatum& datum) {
    for (int k = 0; k < datum.d; ++k)
        if (datum.j[k] != k + 1) return false;
    return true;
}

/// Weakly decreasing list of nonnegative parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 0)
                throw Error(Errc::out_of_range, "negative partition part " + std::to_string(parts_[k]));
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw Error(Errc::out_of_range, "partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t length() const noexcept { return parts_.size(); }

    /// k is 0-based; parts beyond the length read as 0.
    int part(std::size_t k) const noexcept { return k < parts_.size() ? parts_[k] : 0; }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// lambda = (i_d - d, ..., i_2 - 2, i_1 - 1).
inline Partition partition_from_i(const SchubertDatum& datum) {
    std::vector<int> parts(datum.d);
    for (int k = 0; k < datum.d; ++k) parts[k] = datum.i[datum.d - 1 - k] - (datum.d - k);
    return Partition(std::move(parts));
}

/// Conjugate partition: lambda'_k = |{m : lambda_m >= k}|.
inline Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition{};
    std::vector<int> conj(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int k = 0; k < part; ++k) ++conj[k];
    return Partition(std::move(conj));
}

/// Frobenius coordinates (alpha_1..alpha_r | beta_1..beta_r) of a partition:
/// r = max{k : lambda_k >= k}, alpha_k = lambda_k - k, beta_k = lambda'_k - k.
struct FrobeniusCoords {
    int r = 0;
    std::vector<int> alpha;
    std::vector<int> beta;

    bool operator==(const FrobeniusCoords&) const = default;
};

inline FrobeniusCoords frobenius(const Partition& p) {
    Partition conj = conjugate(p);
    FrobeniusCoords f;
    while (f.r < static_cast<int>(p.length()) && p.part(f.r) >= f.r + 1) ++f.r;
    for (int k = 0; k < f.r; ++k) {
        f.alpha.push_back(p.part(k) - (k + 1));
        f.beta.push_back(conj.part(k) - (k + 1));
    }
    return f;
}

/// Rebuilds the partition from its Frobenius coordinates (inverse of
/// frobenius): row k <= r has alpha_k + k cells, row k > r has as many cells
/// as there are columns of length >= k, read off beta.
inline Partition partition_from_frobenius(const FrobeniusCoords& f) {
    if (f.r == 0) return Partition{};
    std::vector<int> parts;
    for (int k = 0; k < f.r; ++k) parts.push_back(f.alpha[k] + k + 1);
    int rows = f.beta[0] + 1;
    for (int k = f.r + 1; k <= rows; ++k) {
        int len = 0;
        for (int m = 0; m < f.r; ++m)
            if (f.beta[m] + m + 1 >= k) ++len;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// The three determinant formulas. Matrices are exposed separately so the
// tests can inspect entries (unit last column, leading minor, LGV identity).
// ---------------------------------------------------------------------------

/// d x d matrix with entry(p,q) = binomial(i_q, p-1-s_q), p,q = 1..d.
inline IntMatrix rz_matrix(const SchubertDatum& datum) {
    SVector s = s_vector(datum);
    IntMatrix m(static_cast<std::size_t>(datum.d));
    for (int p = 1; p <= datum.d; ++p)
        for (int q = 1; q <= datum.d; ++q)
            m.at(p - 1, q - 1) = binomial(datum.i[q - 1], p - 1 - s[q - 1]);
    return m;
}

/// Multiplicity as (-1)^(s_1+...+s_d) det(rz_matrix).
inline Integer multiplicity_rz(const SchubertDatum& datum) {
    SVector s = s_vector(datum);
    int sum = 0;
    for (int v : s) sum += v;
    Integer det = determinant(rz_matrix(datum));
    return sum % 2 == 0 ? det : Integer(-det);
}

/// r x r matrix with entry(p,q) = binomial(alpha_p + beta_q, alpha_p) over
/// the Frobenius coordinates of partition_from_i. Only defined for
/// j = (1,...,d).
inline IntMatrix lw_matrix(const SchubertDatum& datum) {
    if (!is_special_case(datum))
        throw Error(Errc::not_special_case, "j=(" + detail::vec_str(datum.j) + ") is not (1,...,d)");
    FrobeniusCoords f = frobenius(partition_from_i(datum));
    IntMatrix m(static_cast<std::size_t>(f.r));
    for (int p = 0; p < f.r; ++p)
        for (int q = 0; q < f.r; ++q)
            m.at(p, q) = binomial(f.alpha[p] + f.beta[q], f.alpha[p]);
    return m;
}

/// Multiplicity in the special case j = (1,...,d); r = 0 gives 1.
inline Integer multiplicity_lw(const SchubertDatum& datum) {
    return determinant(lw_matrix(datum));
}

/// d x d matrix with the corrected indexing entry(p,q) =
/// binomial(i_d - i_q - s_q, d - p - s_q). This is the count of east/south
/// paths from (-d+p, i_d+p) to (-s_q, i_q+d): horizontal distance d-p-s_q,
/// vertical drop i_d - i_q - (d-p), total i_d - i_q - s_q choose horizontal.
inline IntMatrix thm5_matrix(const SchubertDatum& datum) {
    SVector s = s_vector(datum);
    IntMatrix m(static_cast<std::size_t>(datum.d));
    for (int p = 1; p <= datum.d; ++p)
        for (int q = 1; q <= datum.d; ++q)
            m.at(p - 1, q - 1) = binomial(datum.i[datum.d - 1] - datum.i[q - 1] - s[q - 1], datum.d - p - s[q - 1]);
    return m;
}

/// Multiplicity by the corrected alternative determinant; agrees with
/// multiplicity_rz on every valid datum.
inline Integer multiplicity_thm5(const SchubertDatum& datum) {
    return determinant(thm5_matrix(datum));
}

/// The alternative determinant exactly as printed, entry(p,q) =
/// binomial(i_d - i_p - s_q, d - p - s_q). Kept for documentation and
/// regression only: whenever two s-values coincide the corresponding
/// columns are identical and the determinant collapses to 0, so this is
/// NOT the multiplicity in general.
inline IntMatrix thm5_matrix_printed(const SchubertDatum& datum) {
    SVector s = s_vector(datum);
    IntMatrix m(static_cast<std::size_t>(datum.d));
    for (int p = 1; p <= datum.d; ++p)
        for (int q = 1; q <= datum.d; ++q)
            m.at(p - 1, q - 1) = binomial(datum.i[datum.d - 1] - datum.i[p - 1] - s[q - 1], datum.d - p - s[q - 1]);
    return m;
}

inline Integer thm5_printed_variant(const SchubertDatum& datum) {
    return determinant(thm5_matrix_printed(datum));
}

} // namespace schumult
