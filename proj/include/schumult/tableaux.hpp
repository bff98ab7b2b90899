#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schumult/paths.hpp"

namespace schumult {

/// Shape data of the column arrays counted by the multiplicity:
/// column l (1-based, l = 1..d-1) holds heights[l-1] = l - s_{d-l} cells,
/// and caps[l-1] is the value appended below column l for the augmented
/// monotonicity check, caps[d-l-1] = i_d - i_l - s_l + 1.
struct UnusualShape {
    int d = 0;
    std::vector<int> heights;
    std::vector<int> caps;

    bool operator==(const UnusualShape&) const = default;
};

inline UnusualShape shape_of(const SchubertDatum& datum) {
    if (datum.d < 2)
        throw Error(Errc::degenerate_shape, "d=" + std::to_string(datum.d) +
                                                " has an empty array shape (count 1)");
    SVector s = s_vector(datum);
    UnusualShape shape;
    shape.d = datum.d;
    shape.heights.resize(static_cast<std::size_t>(datum.d - 1));
    shape.caps.resize(static_cast<std::size_t>(datum.d - 1));
    for (int l = 1; l <= datum.d - 1; ++l) {
        shape.heights[l - 1] = l - s[datum.d - l - 1];
        shape.caps[datum.d - l - 1] = datum.i[datum.d - 1] - datum.i[l - 1] - s[l - 1] + 1;
    }
    return shape;
}

/// Top-aligned integer array with d-1 columns of prescribed heights.
/// Zero-height columns are kept as placeholders so column indexing stays
/// aligned with the shape.
struct UnusualArray {
    std::vector<std::vector<int>> columns;

    friend auto operator<=>(const UnusualArray&, const UnusualArray&) = default;
};

struct ArrayCheck {
    bool ok = true;
    std::string violation;
};

namespace detail {

/// Cell of the augmented array at column c (0-based) and 1-based row t:
/// the real entry for t <= heights[c], the cap for t == heights[c] + 1.
/// Returns false when the cell is absent (rows read across such gaps).
inline bool augmented_cell(const UnusualShape& shape, const UnusualArray& a, std::size_t c, int t,
                           int& value) {
    int h = shape.heights[c];
    if (t <= h) {
        value = a.columns[c][static_cast<std::size_t>(t - 1)];
        return true;
    }
    if (t == h + 1) {
        value = shape.caps[c];
        return true;
    }
    return false;
}

inline ArrayCheck fail(std::string msg) { return ArrayCheck{false, std::move(msg)}; }

} // namespace detail

/// Checks properties (1)-(4): prescribed column heights, weakly increasing
/// rows (reading present cells left to right across gaps), strictly
/// increasing columns, and the same two conditions after appending the cap
/// below each column. Returns the first violation instead of throwing.
inline ArrayCheck validate_array(const UnusualShape& shape, const UnusualArray& a) {
    const std::size_t ncols = shape.heights.size();
    if (a.columns.size() != ncols)
        return detail::fail("property (1): array has " + std::to_string(a.columns.size()) +
                            " columns, shape has " + std::to_string(ncols));
    int maxh = 0;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (static_cast<int>(a.columns[c].size()) != shape.heights[c])
            return detail::fail("property (1): column " + std::to_string(c + 1) + " has " +
                                std::to_string(a.columns[c].size()) + " entries, expected " +
                                std::to_string(shape.heights[c]));
        maxh = std::max(maxh, shape.heights[c]);
        for (std::size_t t = 0; t < a.columns[c].size(); ++t)
            if (a.columns[c][t] < 1)
                return detail::fail("entries must be positive: column " + std::to_string(c + 1) +
                                    " row " + std::to_string(t + 1) + " is " +
                                    std::to_string(a.columns[c][t]));
    }
    // (2) rows of the bare array
    for (int t = 1; t <= maxh; ++t) {
        int prev = 0;
        bool have_prev = false;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (shape.heights[c] < t) continue;
            int v = a.columns[c][static_cast<std::size_t>(t - 1)];
            if (have_prev && prev > v)
                return detail::fail("property (2): row " + std::to_string(t) + " decreases at column " +
                                    std::to_string(c + 1) + " (" + std::to_string(prev) + " > " +
                                    std::to_string(v) + ")");
            prev = v;
            have_prev = true;
        }
    }
    // (3) columns strictly increasing
    for (std::size_t c = 0; c < ncols; ++c)
        for (std::size_t t = 1; t < a.columns[c].size(); ++t)
            if (a.columns[c][t - 1] >= a.columns[c][t])
                return detail::fail("property (3): column " + std::to_string(c + 1) +
                                    " not strictly increasing at row " + std::to_string(t + 1));
    // (4) augmented array: caps appended below each column
    for (std::size_t c = 0; c < ncols; ++c)
        if (!a.columns[c].empty() && a.columns[c].back() >= shape.caps[c])
            return detail::fail("property (4): column " + std::to_string(c + 1) + " bottom entry " +
                                std::to_string(a.columns[c].back()) + " not below cap " +
                                std::to_string(shape.caps[c]));
    for (int t = 1; t <= maxh + 1; ++t) {
        int prev = 0;
        bool have_prev = false;
        for (std::size_t c = 0; c < ncols; ++c) {
            int v;
            if (!detail::augmented_cell(shape, a, c, t, v)) continue;
            if (have_prev && prev > v)
                return detail::fail("property (4): augmented row " + std::to_string(t) +
                                    " decreases at column " + std::to_string(c + 1) + " (" +
                                    std::to_string(prev) + " > " + std::to_string(v) + ")");
            prev = v;
            have_prev = true;
        }
    }
    return ArrayCheck{};
}

namespace detail {

class ArrayEnumerator {
public:
    ArrayEnumerator(const UnusualShape& shape, std::int64_t guard)
        : shape_(shape), guard_(guard), work_(shape.heights.size()) {}

    std::vector<UnusualArray> run() {
        out_.clear();
        nodes_ = 0;
        column(0);
        return std::move(out_);
    }

private:
    // nearest present cell of the augmented array to the left of column c
    // in 1-based row t; 0 when the row is empty so far
    int left_neighbor(std::size_t c, int t) const {
        for (std::size_t k = c; k-- > 0;) {
            int h = shape_.heights[k];
            if (t <= h) return work_[k][static_cast<std::size_t>(t - 1)];
            if (t == h + 1) return shape_.caps[k];
        }
        return 0;
    }

    void column(std::size_t c) {
        if (c == shape_.heights.size()) {
            UnusualArray a{work_};
            if (validate_array(shape_, a).ok) out_.push_back(std::move(a));
            return;
        }
        // the cap of this column must fit after everything to its left
        if (left_neighbor(c, shape_.heights[c] + 1) > shape_.caps[c]) return;
        cell(c, 0);
    }

    void cell(std::size_t c, int t) {
        if (t == shape_.heights[c]) {
            column(c + 1);
            return;
        }
        int lo = std::max(1, left_neighbor(c, t + 1));
        if (t > 0) lo = std::max(lo, work_[c][static_cast<std::size_t>(t - 1)] + 1);
        int hi = shape_.caps[c] - shape_.heights[c] + t; // strict chain up to the cap
        for (int v = lo; v <= hi; ++v) {
            if (++nodes_ > guard_)
                throw Error(Errc::guard_exceeded, "array search visited more than " +
                                                      std::to_string(guard_) + " nodes");
            work_[c].push_back(v);
            cell(c, t + 1);
            work_[c].pop_back();
        }
    }

    const UnusualShape& shape_;
    std::int64_t guard_;
    std::int64_t nodes_ = 0;
    std::vector<std::vector<int>> work_;
    std::vector<UnusualArray> out_;
};

} // namespace detail

/// All valid arrays of the shape, in lexicographic order by column-major
/// reading. The guard bounds the number of visited search nodes.
inline std::vector<UnusualArray> enumerate_arrays(const UnusualShape& shape,
                                                  std::int64_t guard = default_guard) {
    return detail::ArrayEnumerator(shape, guard).run();
}

/// Labels the horizontal steps of a nonintersecting R-family along the
/// diagonals y - x = (i_d + d) - t with label t + 1, so a horizontal step
/// leaving the start diagonal gets label 1. The labels of R_l's horizontal
/// steps, in path order, form column d - l; R_d contributes nothing.
inline UnusualArray r_family_to_array(const SchubertDatum& datum, const PathFamily& family) {
    FamilySpec rs = r_spec(datum);
    SigmaInfo info = sigma_of(rs, family);
    for (int l = 0; l < datum.d; ++l)
        if (info.sigma[static_cast<std::size_t>(l)] != l + 1)
            throw Error(Errc::family_invalid, "R path " + std::to_string(l + 1) +
                                                  " does not end at its own end point");
    UnusualArray a;
    a.columns.resize(static_cast<std::size_t>(datum.d - 1));
    const int base = datum.i[datum.d - 1] + datum.d;
    for (int l = 1; l <= datum.d - 1; ++l) {
        const MonotonePath& path = family.paths[static_cast<std::size_t>(l - 1)];
        std::vector<int>& col = a.columns[static_cast<std::size_t>(datum.d - l - 1)];
        LatticePoint at = path.start;
        for (char c : path.steps) {
            if (c == 'E') col.push_back(base - (at.y - at.x) + 1);
            at = apply_step(StepSystem::es, at, c);
        }
    }
    if (datum.d >= 2) {
        ArrayCheck check = validate_array(shape_of(datum), a);
        if (!check.ok)
            throw Error(Errc::family_invalid, "labeling produced an invalid array: " + check.violation);
    }
    return a;
}

/// Reconstructs the unique R-family mapping to a validated array: step t of
/// R_l is horizontal exactly when t appears in column d - l. Round-trips
/// with r_family_to_array in both directions.
inline PathFamily array_to_r_family(const SchubertDatum& datum, const UnusualArray& a) {
    FamilySpec rs = r_spec(datum);
    if (datum.d < 2) {
        if (!a.columns.empty())
            throw Error(Errc::array_invalid, "d=1 admits only the empty array");
        return PathFamily{{MonotonePath{rs.starts[0], ""}}};
    }
    UnusualShape shape = shape_of(datum);
    ArrayCheck check = validate_array(shape, a);
    if (!check.ok) throw Error(Errc::array_invalid, check.violation);
    SVector s = s_vector(datum);
    PathFamily family;
    family.paths.resize(static_cast<std::size_t>(datum.d));
    for (int l = 1; l <= datum.d - 1; ++l) {
        const std::vector<int>& col = a.columns[static_cast<std::size_t>(datum.d - l - 1)];
        int total = datum.i[datum.d - 1] - datum.i[l - 1] - s[l - 1]; // steps along diagonals
        std::string steps(static_cast<std::size_t>(total), 'S');
        for (int label : col) steps[static_cast<std::size_t>(label - 1)] = 'E';
        family.paths[static_cast<std::size_t>(l - 1)] = MonotonePath{rs.starts[static_cast<std::size_t>(l - 1)], steps};
    }
    family.paths[static_cast<std::size_t>(datum.d - 1)] =
        MonotonePath{rs.starts[static_cast<std::size_t>(datum.d - 1)], ""};
    try {
        sigma_of(rs, family);
    } catch (const Error& e) {
        throw Error(Errc::no_preimage, std::string("reconstructed family is invalid: ") + e.what());
    }
    return family;
}

} // namespace schumult
