#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>

#include "schumult/tableaux.hpp"

using namespace schumult;

namespace {

const SchubertDatum d9 = validate(21, 9, {4, 6, 7, 13, 14, 17, 19, 20, 21}, {1, 2, 4, 7, 10, 12, 13, 15, 16});
const SchubertDatum quadric = validate(4, 2, {2, 4}, {1, 2});

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::parse_error;
}

// the d=9 family whose labels spell out the reference array, path by path
PathFamily d9_family() {
    return PathFamily{{
        MonotonePath{{-8, 22}, "SSSSSSSSESE"},
        MonotonePath{{-7, 23}, "SSSSSESSS"},
        MonotonePath{{-6, 24}, "SSSSSESSS"},
        MonotonePath{{-5, 25}, "SSSEEE"},
        MonotonePath{{-4, 26}, "ESESS"},
        MonotonePath{{-3, 27}, "EESE"},
        MonotonePath{{-2, 28}, "EE"},
        MonotonePath{{-1, 29}, "E"},
        MonotonePath{{0, 30}, ""},
    }};
}

UnusualArray d9_array() {
    return UnusualArray{{{1}, {1, 2}, {1, 2, 4}, {1, 3}, {4, 5, 6}, {6}, {6}, {9, 11}}};
}

// labeling without any validity requirement, for the equivalence check
UnusualArray label_raw(const SchubertDatum& datum, const std::vector<MonotonePath>& paths) {
    UnusualArray a;
    a.columns.resize(static_cast<std::size_t>(datum.d - 1));
    const int base = datum.i[static_cast<std::size_t>(datum.d - 1)] + datum.d;
    for (int l = 1; l <= datum.d - 1; ++l) {
        LatticePoint at = paths[static_cast<std::size_t>(l - 1)].start;
        for (char c : paths[static_cast<std::size_t>(l - 1)].steps) {
            if (c == 'E') a.columns[static_cast<std::size_t>(datum.d - l - 1)].push_back(base - (at.y - at.x) + 1);
            at = apply_step(StepSystem::es, at, c);
        }
    }
    return a;
}

void all_es_paths(LatticePoint a, LatticePoint e, std::string& cur, std::vector<std::string>& out) {
    if (a == e) {
        out.push_back(cur);
        return;
    }
    if (a.x < e.x) {
        cur.push_back('E');
        all_es_paths({a.x + 1, a.y}, e, cur, out);
        cur.pop_back();
    }
    if (a.y > e.y) {
        cur.push_back('S');
        all_es_paths({a.x, a.y - 1}, e, cur, out);
        cur.pop_back();
    }
}

bool pairwise_disjoint(StepSystem system, const std::vector<MonotonePath>& paths) {
    std::set<LatticePoint> seen;
    for (const MonotonePath& p : paths)
        for (LatticePoint v : path_vertices(system, p))
            if (!seen.insert(v).second) return false;
    return true;
}

} // namespace

TEST_CASE("shape_of the d=9 instance") {
    UnusualShape shape = shape_of(d9);
    CHECK(shape.heights == std::vector<int>{1, 2, 3, 2, 3, 1, 1, 2});
    CHECK(shape.caps == std::vector<int>{2, 3, 5, 6, 7, 10, 10, 12});
}

TEST_CASE("shape_of edge cases") {
    UnusualShape q = shape_of(quadric);
    CHECK(q.heights == std::vector<int>{1});
    CHECK(q.caps == std::vector<int>{3});

    SchubertDatum smooth = validate(9, 4, {2, 5, 6, 9}, {2, 5, 6, 9});
    CHECK(shape_of(smooth).heights == std::vector<int>{0, 0, 0});

    CHECK(code_of([] { shape_of(validate(5, 1, {3}, {1})); }) == Errc::degenerate_shape);
}

TEST_CASE("validate_array accepts the reference array") {
    CHECK(validate_array(shape_of(d9), d9_array()).ok);
}

TEST_CASE("validate_array rejects targeted mutations") {
    UnusualShape shape = shape_of(d9);

    UnusualArray capped = d9_array();
    capped.columns[7][1] = 12; // must stay strictly below the appended 12
    ArrayCheck check = validate_array(shape, capped);
    CHECK_FALSE(check.ok);
    CHECK(check.violation.find("property (4)") != std::string::npos);

    UnusualArray short_col = d9_array();
    short_col.columns[2].pop_back();
    CHECK(validate_array(shape, short_col).violation.find("property (1)") != std::string::npos);

    UnusualArray row_bad = d9_array();
    row_bad.columns[4][0] = 9; // row 1 would read ... 9, 6 ...
    CHECK(validate_array(shape, row_bad).violation.find("property (2)") != std::string::npos);

    UnusualArray col_bad = d9_array();
    col_bad.columns[1][1] = 1; // column 2 no longer strictly increasing
    CHECK(validate_array(shape, col_bad).violation.find("property (3)") != std::string::npos);

    UnusualArray nonpos = d9_array();
    nonpos.columns[0][0] = 0;
    CHECK_FALSE(validate_array(shape, nonpos).ok);
}

TEST_CASE("empty shape has exactly the empty array") {
    SchubertDatum smooth = validate(9, 4, {2, 5, 6, 9}, {2, 5, 6, 9});
    UnusualShape shape = shape_of(smooth);
    std::vector<UnusualArray> arrays = enumerate_arrays(shape);
    REQUIRE(arrays.size() == 1);
    CHECK(validate_array(shape, arrays.front()).ok);
    CHECK(multiplicity_rz(smooth) == 1);
}

TEST_CASE("quadric arrays are [1] and [2]") {
    std::vector<UnusualArray> arrays = enumerate_arrays(shape_of(quadric));
    REQUIRE(arrays.size() == 2);
    CHECK(arrays[0] == UnusualArray{{{1}}});
    CHECK(arrays[1] == UnusualArray{{{2}}});
}

TEST_CASE("array count equals the multiplicity") {
    for (const SchubertDatum& datum :
         {validate(7, 3, {2, 5, 7}, {1, 2, 3}), validate(7, 3, {3, 5, 7}, {1, 3, 4}),
          validate(8, 4, {2, 4, 7, 8}, {1, 3, 4, 6})}) {
        std::vector<UnusualArray> arrays = enumerate_arrays(shape_of(datum));
        CHECK(Integer(arrays.size()) == multiplicity_rz(datum));
    }
}

TEST_CASE("enumeration guard") {
    CHECK(code_of([] { enumerate_arrays(shape_of(d9), 50); }) == Errc::guard_exceeded);
}

TEST_CASE("labeling the d=9 reference family yields the reference array") {
    CHECK(r_family_to_array(d9, d9_family()) == d9_array());
}

TEST_CASE("reconstruction inverts the labeling on the reference pair") {
    CHECK(array_to_r_family(d9, d9_array()) == d9_family());
}

TEST_CASE("consecutive east steps get consecutive labels") {
    SchubertDatum datum = validate(7, 3, {5, 6, 7}, {1, 2, 3});
    // R_1 runs (-2,8) -> (0,8) with no south steps at all
    std::vector<PathFamily> fams = enumerate_families(r_spec(datum));
    REQUIRE(!fams.empty());
    for (const PathFamily& f : fams) {
        CHECK(f.paths[0].steps == "EE");
        UnusualArray a = r_family_to_array(datum, f);
        CHECK(a.columns[1] == std::vector<int>{1, 2});
    }
}

TEST_CASE("quadric R-families label to the two arrays") {
    std::vector<PathFamily> fams = enumerate_families(r_spec(quadric));
    REQUIRE(fams.size() == 2);
    std::set<UnusualArray> arrays;
    for (const PathFamily& f : fams) arrays.insert(r_family_to_array(quadric, f));
    CHECK(arrays == std::set<UnusualArray>{UnusualArray{{{1}}}, UnusualArray{{{2}}}});
}

TEST_CASE("labeling is a bijection onto the enumerated arrays") {
    for (const SchubertDatum& datum :
         {quadric, validate(7, 3, {2, 5, 7}, {1, 2, 3}), validate(7, 3, {3, 5, 6}, {2, 3, 4})}) {
        std::vector<PathFamily> fams = enumerate_families(r_spec(datum));
        std::vector<UnusualArray> arrays = enumerate_arrays(shape_of(datum));
        REQUIRE(fams.size() == arrays.size());
        std::set<UnusualArray> image;
        for (const PathFamily& f : fams) {
            UnusualArray a = r_family_to_array(datum, f);
            CHECK(array_to_r_family(datum, a) == f);
            CHECK(image.insert(a).second);
        }
        CHECK(image == std::set<UnusualArray>(arrays.begin(), arrays.end()));
    }
}

TEST_CASE("array_to_r_family rejects invalid arrays") {
    CHECK(code_of([] { array_to_r_family(quadric, UnusualArray{{{3}}}); }) == Errc::array_invalid);
    CHECK(code_of([] { array_to_r_family(quadric, UnusualArray{{{0}}}); }) == Errc::array_invalid);
    CHECK(code_of([] { array_to_r_family(quadric, UnusualArray{}); }) == Errc::array_invalid);
}

TEST_CASE("d=1 has the empty array and the single zero-length family") {
    SchubertDatum datum = validate(5, 1, {4}, {2});
    PathFamily family = array_to_r_family(datum, UnusualArray{});
    REQUIRE(family.paths.size() == 1);
    CHECK(family.paths[0].steps.empty());
    CHECK(r_family_to_array(datum, family) == UnusualArray{});
}

TEST_CASE("row condition on the augmented array is exactly vertex-disjointness") {
    // every tuple of monotone paths with the model's endpoints, intersecting
    // or not, labels to an array; the augmented-row reading separates the two
    // classes precisely (property (2) applied per property (4))
    for (const SchubertDatum& datum :
         {validate(5, 3, {2, 3, 5}, {1, 2, 4}), validate(6, 3, {2, 3, 6}, {1, 2, 4}),
          validate(5, 2, {2, 5}, {1, 3}), validate(6, 3, {1, 4, 6}, {1, 2, 3})}) {
        FamilySpec rs = r_spec(datum);
        std::vector<std::vector<std::string>> pathsets;
        for (std::size_t l = 0; l < rs.starts.size(); ++l) {
            std::vector<std::string> set;
            std::string cur;
            all_es_paths(rs.starts[l], rs.ends[l], cur, set);
            REQUIRE(!set.empty());
            pathsets.push_back(std::move(set));
        }
        UnusualShape shape = shape_of(datum);
        std::vector<MonotonePath> tuple(rs.starts.size());
        std::function<void(std::size_t)> rec = [&](std::size_t l) {
            if (l == pathsets.size()) {
                bool disjoint = pairwise_disjoint(StepSystem::es, tuple);
                bool rows_ok = validate_array(shape, label_raw(datum, tuple)).ok;
                CHECK(disjoint == rows_ok);
                return;
            }
            for (const std::string& steps : pathsets[l]) {
                tuple[l] = MonotonePath{rs.starts[l], steps};
                rec(l + 1);
            }
        };
        rec(0);
    }
}
