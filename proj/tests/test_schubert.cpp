#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "schumult/schubert.hpp"

using namespace schumult;

namespace {

// the two running instances used throughout the suite
const SchubertDatum d7 = validate(17, 7, {3, 5, 9, 10, 14, 15, 17}, {1, 2, 3, 4, 5, 6, 7});
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

Partition random_partition(std::mt19937& rng) {
    std::size_t len = rng() % 7;
    std::vector<int> parts(len);
    int top = 1 + static_cast<int>(rng() % 10);
    for (std::size_t k = 0; k < len; ++k) {
        parts[k] = top;
        top -= static_cast<int>(rng() % 3);
        if (top < 0) top = 0;
    }
    return Partition(parts);
}

} // namespace

TEST_CASE("validate accepts the running instances") {
    CHECK(d9.d == 9);
    CHECK(validate(21, 9, d9.i, d9.j) == d9);
    CHECK(d7.n == 17);
}

TEST_CASE("validate rejects malformed data") {
    CHECK(code_of([] { validate(4, 2, {2, 4}, {3, 4}); }) == Errc::not_dominated);
    CHECK(code_of([] { validate(5, 2, {4, 2}, {1, 2}); }) == Errc::not_strictly_increasing);
    CHECK(code_of([] { validate(5, 2, {4, 6}, {1, 2}); }) == Errc::out_of_range);
    CHECK(code_of([] { validate(5, 2, {0, 3}, {1, 2}); }) == Errc::out_of_range);
    CHECK(code_of([] { validate(5, 0, {}, {}); }) == Errc::bad_dimensions);
    CHECK(code_of([] { validate(3, 4, {1, 2, 3, 4}, {1, 2, 3, 4}); }) == Errc::bad_dimensions);
    CHECK(code_of([] { validate(5, 2, {1, 2, 3}, {1, 2}); }) == Errc::bad_dimensions);
}

TEST_CASE("s_vector matches the running examples") {
    CHECK(s_vector(d7) == SVector{4, 2, 0, 0, 0, 0, 0});
    CHECK(s_vector(d9) == SVector{6, 6, 5, 2, 2, 0, 0, 0, 0});
    CHECK(s_vector(quadric) == SVector{0, 0});
}

TEST_CASE("s_vector at j = i is (d-1, ..., 1, 0)") {
    SchubertDatum datum = validate(9, 4, {2, 5, 6, 9}, {2, 5, 6, 9});
    CHECK(s_vector(datum) == SVector{3, 2, 1, 0});
}

TEST_CASE("partition_from_i") {
    CHECK(partition_from_i(d7) == Partition({10, 9, 9, 6, 6, 3, 2}));
    CHECK(partition_from_i(validate(5, 3, {1, 2, 3}, {1, 2, 3})).empty());
    CHECK(partition_from_i(quadric) == Partition({2, 1}));
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({10, 9, 9, 6, 6, 3, 2})) == Partition({7, 7, 6, 5, 5, 5, 3, 3, 3, 1}));
    CHECK(conjugate(Partition{}).empty());
    CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
}

TEST_CASE("conjugate is an involution") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Partition p = random_partition(rng);
        CHECK(conjugate(conjugate(p)) == p);
    }
}

TEST_CASE("frobenius coordinates") {
    FrobeniusCoords f = frobenius(Partition({10, 9, 9, 6, 6, 3, 2}));
    CHECK(f.r == 5);
    CHECK(f.alpha == std::vector<int>{9, 7, 6, 2, 1});
    CHECK(f.beta == std::vector<int>{6, 5, 3, 1, 0});

    FrobeniusCoords empty = frobenius(Partition{});
    CHECK(empty.r == 0);
    CHECK(empty.alpha.empty());
    CHECK(empty.beta.empty());

    FrobeniusCoords hook = frobenius(Partition({2, 1}));
    CHECK(hook.r == 1);
    CHECK(hook.alpha == std::vector<int>{1});
    CHECK(hook.beta == std::vector<int>{1});
}

TEST_CASE("frobenius invariants and reconstruction round trip") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        Partition p = random_partition(rng);
        FrobeniusCoords f = frobenius(p);
        for (int k = 0; k < f.r; ++k) {
            CHECK(f.alpha[static_cast<std::size_t>(k)] >= 0);
            CHECK(f.beta[static_cast<std::size_t>(k)] >= 0);
            if (k > 0) {
                CHECK(f.alpha[static_cast<std::size_t>(k - 1)] > f.alpha[static_cast<std::size_t>(k)]);
                CHECK(f.beta[static_cast<std::size_t>(k - 1)] > f.beta[static_cast<std::size_t>(k)]);
            }
        }
        CHECK(p.part(static_cast<std::size_t>(f.r)) < f.r + 1);
        CHECK(partition_from_frobenius(f) == p);
    }
}

TEST_CASE("multiplicity_rz") {
    for (int i1 = 1; i1 <= 5; ++i1)
        for (int j1 = 1; j1 <= i1; ++j1)
            CHECK(multiplicity_rz(validate(5, 1, {i1}, {j1})) == 1);
    // the singular point of the Schubert quadric cone; value fixed by the
    // brute-force enumeration oracle
    CHECK(multiplicity_rz(quadric) == 2);
    CHECK(multiplicity_rz(d7) == multiplicity_lw(d7));
}

TEST_CASE("multiplicity_lw") {
    CHECK(multiplicity_lw(validate(6, 3, {1, 2, 3}, {1, 2, 3})) == 1);
    CHECK(multiplicity_lw(quadric) == 2);
    CHECK(lw_matrix(quadric) == IntMatrix::from_rows({{2}}));
    CHECK(code_of([] { multiplicity_lw(validate(4, 2, {2, 4}, {2, 3})); }) == Errc::not_special_case);
}

TEST_CASE("multiplicity_thm5 corrected indexing") {
    CHECK(thm5_matrix(quadric) == IntMatrix::from_rows({{2, 0}, {1, 1}}));
    CHECK(multiplicity_thm5(quadric) == 2);

    SchubertDatum small = validate(3, 2, {1, 3}, {1, 2});
    CHECK(thm5_matrix(small) == IntMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(multiplicity_thm5(small) == 1);
    CHECK(multiplicity_rz(small) == 1);
}

TEST_CASE("thm5 equals rz along j = i") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        int d = 1 + static_cast<int>(rng() % std::min(n, 4));
        std::vector<int> i;
        int need = d;
        for (int v = 1; v <= n && need > 0; ++v)
            if (static_cast<int>(rng() % static_cast<unsigned>(n - v + 1)) < need) {
                i.push_back(v);
                --need;
            }
        SchubertDatum datum = validate(n, d, i, i);
        CHECK(multiplicity_thm5(datum) == multiplicity_rz(datum));
        CHECK(multiplicity_rz(datum) == 1); // j = i is a smooth point
    }
}

TEST_CASE("printed variant of the alternative determinant") {
    CHECK(thm5_printed_variant(quadric) == 0); // identical columns, the typo detector
    CHECK(thm5_printed_variant(validate(5, 1, {4}, {2})) == 1);
    CHECK(thm5_printed_variant(validate(3, 2, {1, 3}, {1, 2})) == 1);
}

TEST_CASE("running instances keep their frozen multiplicities") {
    CHECK(multiplicity_rz(d7) == 624288);
    CHECK(multiplicity_rz(d9) == 37649);
    CHECK(multiplicity_thm5(d9) == 37649);
}
