#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "schumult/schubert.hpp"

namespace schumult {

struct LatticePoint {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::string point_str(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

/// The two fixed unit-step systems: ne uses N=(0,+1) and E=(+1,0),
/// es uses E=(+1,0) and S=(0,-1). Step letters order lexicographically
/// as 'E' < 'N' and 'E' < 'S'.
enum class StepSystem { ne, es };

inline bool step_valid(StepSystem system, char c) {
    return c == 'E' || (system == StepSystem::ne ? c == 'N' : c == 'S');
}

inline LatticePoint apply_step(StepSystem system, LatticePoint p, char c) {
    if (c == 'E') return {p.x + 1, p.y};
    if (system == StepSystem::ne && c == 'N') return {p.x, p.y + 1};
    if (system == StepSystem::es && c == 'S') return {p.x, p.y - 1};
    throw Error(Errc::family_invalid, std::string("invalid step '") + c + "'");
}

/// A monotone lattice path: a start point plus a step string over the
/// system's two letters. Vertices are recovered by prefix sums.
struct MonotonePath {
    LatticePoint start;
    std::string steps;

    friend auto operator<=>(const MonotonePath&, const MonotonePath&) = default;
};

inline std::vector<LatticePoint> path_vertices(StepSystem system, const MonotonePath& path) {
    std::vector<LatticePoint> vs;
    vs.reserve(path.steps.size() + 1);
    vs.push_back(path.start);
    for (char c : path.steps) vs.push_back(apply_step(system, vs.back(), c));
    return vs;
}

inline LatticePoint path_end(StepSystem system, const MonotonePath& path) {
    LatticePoint p = path.start;
    for (char c : path.steps) p = apply_step(system, p, c);
    return p;
}

enum class FamilyModel { q, p, r, custom };

inline char model_letter(FamilyModel m) {
    switch (m) {
        case FamilyModel::q: return 'q';
        case FamilyModel::p: return 'p';
        case FamilyModel::r: return 'r';
        case FamilyModel::custom: return 'c';
    }
    return '?';
}

/// Start/end point lists plus the step system; identifies one family model.
/// Ends are listed in their defining order, the matching permutation is
/// discovered by enumeration, never prescribed.
struct FamilySpec {
    StepSystem system = StepSystem::ne;
    std::vector<LatticePoint> starts;
    std::vector<LatticePoint> ends;
    FamilyModel model = FamilyModel::custom;
};

/// Number of monotone paths a -> e. For ne this is binomial(dx+dy, dx)
/// when both displacements are >= 0, for es binomial(dx-dy, dx) when
/// dx >= 0 >= dy; zero whenever a displacement has the wrong sign.
inline Integer count_paths(StepSystem system, LatticePoint a, LatticePoint e) {
    std::int64_t dx = e.x - a.x;
    std::int64_t dy = e.y - a.y;
    if (system == StepSystem::es) dy = -dy;
    if (dx < 0 || dy < 0) return 0;
    return binomial(dx + dy, dx);
}

/// Matrix of pairwise path counts, entry(p,q) = count(starts[p] -> ends[q]).
inline IntMatrix lgv_matrix(const FamilySpec& spec) {
    IntMatrix m(spec.starts.size());
    for (std::size_t p = 0; p < spec.starts.size(); ++p)
        for (std::size_t q = 0; q < spec.ends.size(); ++q)
            m.at(p, q) = count_paths(spec.system, spec.starts[p], spec.ends[q]);
    return m;
}

/// A tuple of paths, paths[l] starting at spec.starts[l]. Which end each
/// path reaches defines the induced permutation (see sigma_of).
struct PathFamily {
    std::vector<MonotonePath> paths;

    friend auto operator<=>(const PathFamily&, const PathFamily&) = default;
};

/// Signed count of nonintersecting families: total = sum over permutations
/// of sign(sigma) * count(sigma); by_permutation keeps the nonzero counts
/// keyed by sigma as a 1-based image vector.
struct SignedCount {
    Integer total = 0;
    std::map<std::vector<int>, Integer> by_permutation;
};

inline Integer family_count(const SignedCount& sc) {
    Integer n = 0;
    for (const auto& [sigma, cnt] : sc.by_permutation) n += cnt;
    return n;
}

inline int permutation_sign(const std::vector<int>& sigma) {
    int sign = 1;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            if (sigma[a] > sigma[b]) sign = -sign;
    return sign;
}

constexpr std::int64_t default_guard = 10'000'000;

namespace detail {

inline std::uint64_t point_key(LatticePoint p) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.y));
}

/// Largest product of pairwise path counts over all bijections
/// starts -> ends, by depth-first assignment with a row-maxima bound.
inline Integer max_bijection_product(const FamilySpec& spec) {
    const std::size_t d = spec.starts.size();
    if (d == 0) return 1;
    std::vector<std::vector<Integer>> counts(d, std::vector<Integer>(d));
    std::vector<Integer> row_max(d, 0);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            counts[p][q] = count_paths(spec.system, spec.starts[p], spec.ends[q]);
            row_max[p] = std::max(row_max[p], counts[p][q]);
        }
    std::vector<Integer> suffix(d + 1, 1);
    for (std::size_t p = d; p-- > 0;) suffix[p] = suffix[p + 1] * row_max[p];

    Integer best = 0;
    std::vector<bool> used(d, false);
    auto dfs = [&](auto&& self, std::size_t p, const Integer& partial) -> void {
        if (partial * suffix[p] <= best) return;
        if (p == d) {
            best = partial;
            return;
        }
        for (std::size_t q = 0; q < d; ++q) {
            if (used[q] || counts[p][q] == 0) continue;
            used[q] = true;
            self(self, p + 1, partial * counts[p][q]);
            used[q] = false;
        }
    };
    dfs(dfs, 0, 1);
    return best;
}

inline void check_guard(const FamilySpec& spec, std::int64_t guard) {
    Integer worst = max_bijection_product(spec);
    if (worst > guard)
        throw Error(Errc::guard_exceeded, "path-tuple bound " + worst.str() + " exceeds guard " +
                                              std::to_string(guard));
}

/// Backtracking core shared by the counting and the materializing
/// enumeration. Paths are grown step by step ('E' before 'N'/'S'), the end
/// assignment is free: any still-unassigned end reachable from the current
/// point may terminate the path. Vertex-disjointness is maintained through
/// a shared occupancy set that all start points are seeded into.
template <typename OnFamily>
class FamilySearch {
public:
    FamilySearch(const FamilySpec& spec, OnFamily on_family)
        : spec_(spec), on_family_(std::move(on_family)) {}

    void run() {
        const std::size_t d = spec_.starts.size();
        if (spec_.ends.size() != d)
            throw Error(Errc::family_invalid, "spec has " + std::to_string(d) + " starts but " +
                                                  std::to_string(spec_.ends.size()) + " ends");
        end_used_.assign(d, false);
        paths_.assign(d, MonotonePath{});
        used_.clear();
        for (LatticePoint s : spec_.starts) {
            if (!used_.insert(point_key(s)).second)
                throw Error(Errc::family_invalid, "duplicate start point " + point_str(s));
        }
        next_path(0);
    }

private:
    bool reachable(LatticePoint p, LatticePoint e) const {
        if (spec_.system == StepSystem::ne) return p.x <= e.x && p.y <= e.y;
        return p.x <= e.x && p.y >= e.y;
    }

    void next_path(std::size_t l) {
        if (l == spec_.starts.size()) {
            on_family_(paths_);
            return;
        }
        paths_[l].start = spec_.starts[l];
        paths_[l].steps.clear();
        for (std::size_t q = 0; q < spec_.ends.size(); ++q) {
            if (end_used_[q]) continue;
            if (!reachable(spec_.starts[l], spec_.ends[q])) continue;
            end_used_[q] = true;
            grow(l, spec_.starts[l], spec_.ends[q]);
            end_used_[q] = false;
        }
    }

    void grow(std::size_t l, LatticePoint at, LatticePoint end) {
        if (at == end) {
            next_path(l + 1);
            return;
        }
        const char second = spec_.system == StepSystem::ne ? 'N' : 'S';
        for (char c : {'E', second}) {
            LatticePoint nxt = apply_step(spec_.system, at, c);
            if (!reachable(nxt, end)) continue;
            std::uint64_t key = point_key(nxt);
            if (!used_.insert(key).second) continue;
            paths_[l].steps.push_back(c);
            grow(l, nxt, end);
            paths_[l].steps.pop_back();
            used_.erase(key); // by key: recursion may have rehashed the set
        }
    }

    const FamilySpec& spec_;
    OnFamily on_family_;
    std::vector<bool> end_used_;
    std::vector<MonotonePath> paths_;
    std::unordered_set<std::uint64_t> used_;
};

} // namespace detail

/// The induced bijection of a family: sigma[l-1] = q means paths[l-1] ends
/// at spec.ends[q-1] (1-based on both sides), plus the sign of sigma.
/// Throws FamilyInvalid unless the family is a valid nonintersecting family
/// for the spec (correct starts, legal steps, bijective ends, pairwise
/// vertex-disjoint including endpoints of zero-length paths).
struct SigmaInfo {
    std::vector<int> sigma;
    int sign = 1;
};

inline SigmaInfo sigma_of(const FamilySpec& spec, const PathFamily& family) {
    const std::size_t d = spec.starts.size();
    if (family.paths.size() != d)
        throw Error(Errc::family_invalid, "family has " + std::to_string(family.paths.size()) +
                                              " paths, spec has " + std::to_string(d));
    std::unordered_set<std::uint64_t> used;
    std::vector<bool> end_used(d, false);
    SigmaInfo info;
    for (std::size_t l = 0; l < d; ++l) {
        const MonotonePath& path = family.paths[l];
        if (path.start != spec.starts[l])
            throw Error(Errc::family_invalid, "path " + std::to_string(l + 1) + " starts at " +
                                                  point_str(path.start) + ", spec says " +
                                                  point_str(spec.starts[l]));
        for (char c : path.steps)
            if (!step_valid(spec.system, c))
                throw Error(Errc::family_invalid, std::string("path ") + std::to_string(l + 1) +
                                                      " has invalid step '" + c + "'");
        LatticePoint at = path.start;
        if (!used.insert(detail::point_key(at)).second)
            throw Error(Errc::family_invalid, "paths share point " + point_str(at));
        for (char c : path.steps) {
            at = apply_step(spec.system, at, c);
            if (!used.insert(detail::point_key(at)).second)
                throw Error(Errc::family_invalid, "paths share point " + point_str(at));
        }
        bool matched = false;
        for (std::size_t q = 0; q < d; ++q) {
            if (!end_used[q] && spec.ends[q] == at) {
                end_used[q] = true;
                info.sigma.push_back(static_cast<int>(q) + 1);
                matched = true;
                break;
            }
        }
        if (!matched)
            throw Error(Errc::family_invalid, "path " + std::to_string(l + 1) + " ends at " +
                                                  point_str(at) + ", not a free spec end point");
    }
    info.sign = permutation_sign(info.sigma);
    return info;
}

/// Exhaustive signed enumeration of nonintersecting families over all
/// bijections starts -> ends. The guard rejects the run up front if the
/// product of pairwise path counts along any bijection exceeds it.
inline SignedCount enumerate_nonintersecting(const FamilySpec& spec,
                                             std::int64_t guard = default_guard) {
    detail::check_guard(spec, guard);
    SignedCount result;
    detail::FamilySearch search(spec, [&](const std::vector<MonotonePath>& paths) {
        SigmaInfo info = sigma_of(spec, PathFamily{paths});
        result.by_permutation[info.sigma] += 1;
        result.total += info.sign;
    });
    search.run();
    // the signed total and the path-count determinant must coincide; a
    // mismatch would mean the enumeration or the counting is broken
    Integer det = determinant(lgv_matrix(spec));
    if (det != result.total)
        throw Error(Errc::disagreement, "signed nonintersecting total " + result.total.str() +
                                            " differs from the path-count determinant " + det.str());
    return result;
}

/// All nonintersecting families, in lexicographic path order (families
/// compare as tuples of step strings).
inline std::vector<PathFamily> enumerate_families(const FamilySpec& spec,
                                                  std::int64_t guard = default_guard) {
    detail::check_guard(spec, guard);
    std::vector<PathFamily> out;
    detail::FamilySearch search(spec, [&](const std::vector<MonotonePath>& paths) {
        out.push_back(PathFamily{paths});
    });
    search.run();
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// The three concrete family models.
// ---------------------------------------------------------------------------

/// Q-model: north/east paths, Q_l from (-l+1, l-1), ends (-s_q, s_q + i_q)
/// listed by q. Counts these families = multiplicity, one permutation only.
inline FamilySpec q_spec(const SchubertDatum& datum) {
    SVector s = s_vector(datum);
    FamilySpec spec;
    spec.system = StepSystem::ne;
    spec.model = FamilyModel::q;
    for (int l = 1; l <= datum.d; ++l) spec.starts.push_back({-l + 1, l - 1});
    for (int q = 1; q <= datum.d; ++q) spec.ends.push_back({-s[q - 1], s[q - 1] + datum.i[q - 1]});
    return spec;
}

/// P-model (j = (1,...,d) only): north/east paths from (-beta_m, 0) to
/// (0, alpha_m) over the Frobenius coordinates of the partition.
inline FamilySpec p_spec(const SchubertDatum& datum) {
    if (!is_special_case(datum))
        throw Error(Errc::not_special_case, "j=(" + detail::vec_str(datum.j) + ") is not (1,...,d)");
    FrobeniusCoords f = frobenius(partition_from_i(datum));
    FamilySpec spec;
    spec.system = StepSystem::ne;
    spec.model = FamilyModel::p;
    for (int m = 0; m < f.r; ++m) {
        spec.starts.push_back({-f.beta[m], 0});
        spec.ends.push_back({0, f.alpha[m]});
    }
    return spec;
}

/// R-model: east/south paths, R_l from (-d+l, i_d+l) to (-s_l, i_l+d).
/// R_d is the zero-length path (start = end); it still occupies its point.
inline FamilySpec r_spec(const SchubertDatum& datum) {
    SVector s = s_vector(datum);
    FamilySpec spec;
    spec.system = StepSystem::es;
    spec.model = FamilyModel::r;
    for (int l = 1; l <= datum.d; ++l) {
        spec.starts.push_back({-datum.d + l, datum.i[datum.d - 1] + l});
        spec.ends.push_back({-s[l - 1], datum.i[l - 1] + datum.d});
    }
    return spec;
}

// ---------------------------------------------------------------------------
// The cut bijection between Q-families and P-families (j = (1,...,d)).
// ---------------------------------------------------------------------------

/// Cuts a nonintersecting Q-family at the line y = d+1: paths terminating
/// at height d (ends of the form (i_l - d, d)) are dropped, the forced
/// vertical prefixes of the others are removed and the remainder translated
/// down by d+1. The result is a valid nonintersecting P-family, indexed in
/// p_spec order.
inline PathFamily cut_q_to_p(const SchubertDatum& datum, const PathFamily& family) {
    if (!is_special_case(datum))
        throw Error(Errc::not_special_case, "cut requires j=(1,...,d)");
    FamilySpec qs = q_spec(datum);
    sigma_of(qs, family);
    FamilySpec ps = p_spec(datum);
    std::vector<MonotonePath> out(ps.starts.size());
    std::vector<bool> filled(ps.starts.size(), false);
    for (std::size_t l = 0; l < family.paths.size(); ++l) {
        const MonotonePath& path = family.paths[l];
        LatticePoint end = path_end(StepSystem::ne, path);
        if (end.y <= datum.d) {
            // terminates below the cut line; the nonintersecting condition
            // forces it to be the vertical segment, dropped without loss
            if (end.x != path.start.x)
                throw Error(Errc::family_invalid,
                            "path " + std::to_string(l + 1) + " ends below the cut but is not vertical");
            continue;
        }
        std::size_t prefix = static_cast<std::size_t>(datum.d + 1 - path.start.y);
        if (path.steps.size() < prefix ||
            path.steps.compare(0, prefix, std::string(prefix, 'N')) != 0)
            throw Error(Errc::family_invalid,
                        "path " + std::to_string(l + 1) + " is not vertical up to height d+1");
        MonotonePath cutp{{path.start.x, 0}, path.steps.substr(prefix)};
        std::size_t m = 0;
        while (m < ps.starts.size() && ps.starts[m].x != path.start.x) ++m;
        if (m == ps.starts.size() || filled[m])
            throw Error(Errc::family_invalid, "surviving path at x=" + std::to_string(path.start.x) +
                                                  " has no free P start");
        if (path_end(StepSystem::ne, cutp) != ps.ends[m])
            throw Error(Errc::family_invalid, "cut path " + std::to_string(m + 1) +
                                                  " does not reach its P end point");
        out[m] = cutp;
        filled[m] = true;
    }
    for (bool f : filled)
        if (!f) throw Error(Errc::family_invalid, "cut produced fewer paths than p_spec expects");
    PathFamily result{std::move(out)};
    sigma_of(ps, result);
    return result;
}

/// Inverse of cut_q_to_p: re-attaches the forced vertical prefixes and the
/// dropped vertical paths; cut_q_to_p(extend_p_to_q(f)) == f and vice versa.
inline PathFamily extend_p_to_q(const SchubertDatum& datum, const PathFamily& family) {
    if (!is_special_case(datum))
        throw Error(Errc::not_special_case, "extend requires j=(1,...,d)");
    FamilySpec ps = p_spec(datum);
    sigma_of(ps, family);
    for (std::size_t m = 0; m < family.paths.size(); ++m)
        if (path_end(StepSystem::ne, family.paths[m]) != ps.ends[m])
            throw Error(Errc::family_invalid, "P path " + std::to_string(m + 1) +
                                                  " does not end at its own end point");
    FamilySpec qs = q_spec(datum);
    std::vector<MonotonePath> out(static_cast<std::size_t>(datum.d));
    std::vector<bool> made(out.size(), false);
    for (std::size_t m = 0; m < family.paths.size(); ++m) {
        std::size_t l0 = static_cast<std::size_t>(-ps.starts[m].x); // beta_m
        std::size_t prefix = static_cast<std::size_t>(datum.d) + 1 - l0;
        out[l0] = MonotonePath{qs.starts[l0], std::string(prefix, 'N') + family.paths[m].steps};
        made[l0] = true;
    }
    for (int k = 0; k < datum.d; ++k) {
        if (datum.i[k] > datum.d) continue;
        std::size_t l0 = static_cast<std::size_t>(datum.d - datum.i[k]);
        if (made[l0])
            throw Error(Errc::family_invalid, "start " + point_str(qs.starts[l0]) + " claimed twice");
        out[l0] = MonotonePath{qs.starts[l0], std::string(static_cast<std::size_t>(datum.i[k]), 'N')};
        made[l0] = true;
    }
    for (bool f : made)
        if (!f) throw Error(Errc::family_invalid, "extension left a Q start without a path");
    PathFamily result{std::move(out)};
    sigma_of(qs, result);
    return result;
}

} // namespace schumult
