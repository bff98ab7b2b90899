#include <catch2/catch_amalgamated.hpp>

#include "schumult/verify.hpp"

using namespace schumult;

namespace {

const CheckRow& row(const VerifyReport& report, const std::string& name) {
    for (const CheckRow& r : report.rows)
        if (r.name == name) return r;
    FAIL("missing row " + name);
    static CheckRow dummy;
    return dummy;
}

} // namespace

TEST_CASE("the exhaustive corpus has the expected size and structure") {
    std::vector<SchubertDatum> corpus = exhaustive_corpus();
    CHECK(corpus.size() == 714);
    long special = 0;
    for (const SchubertDatum& datum : corpus) {
        CHECK(validate(datum.n, datum.d, datum.i, datum.j) == datum);
        if (is_special_case(datum)) ++special;
    }
    CHECK(special == 63); // sum over d of C(7,d)
}

TEST_CASE("random instances are valid, bounded and seed-deterministic") {
    std::vector<SchubertDatum> a = random_instances(42, 50, 12, 5);
    std::vector<SchubertDatum> b = random_instances(42, 50, 12, 5);
    CHECK(a == b);
    CHECK(a.size() == 50);
    for (const SchubertDatum& datum : a) {
        CHECK(datum.n <= 12);
        CHECK(datum.d <= 5);
        CHECK(validate(datum.n, datum.d, datum.i, datum.j) == datum);
    }
    CHECK(random_instances(43, 50, 12, 5) != a);
}

TEST_CASE("random-only harness run passes") {
    VerifyOptions opt;
    opt.include_corpus = false;
    opt.counts = 40;
    VerifyReport report = run_verify(opt);
    CHECK(report.pass());
    CHECK(report.random_size == 40);
    CHECK(row(report, "rz-thm5-equal").applied == 40);
    CHECK(row(report, "remark-last-column-unit").applied == 40);
    CHECK(report.table.size() == 40);
}

TEST_CASE("the fault mode detects the printed-variant typo") {
    VerifyOptions opt;
    opt.include_corpus = false;
    opt.counts = 60;
    opt.fault_thm5_printed = true;
    VerifyReport report = run_verify(opt);
    CHECK_FALSE(report.pass());
    CHECK(row(report, "rz-thm5-equal").failed > 0);
    CHECK_FALSE(row(report, "rz-thm5-equal").first_failure.empty());
    std::string table = report_table(report);
    CHECK(table.find("fault: thm5-printed") != std::string::npos);
    CHECK(table.find("fault-witness: n=4 d=2 i=2,4 j=1,2: rz=2 thm5_printed=0") != std::string::npos);
    CHECK(table.find("result: FAIL") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
    VerifyOptions opt;
    opt.include_corpus = false;
    opt.counts = 25;
    opt.seed = 7;
    std::string a = report_table(run_verify(opt));
    std::string b = report_table(run_verify(opt));
    CHECK(a == b);
    CHECK(a.find("result: PASS") != std::string::npos);
}

TEST_CASE("csv export carries one row per instance") {
    VerifyOptions opt;
    opt.include_corpus = false;
    opt.counts = 10;
    VerifyReport report = run_verify(opt);
    std::string csv = report_csv(report);
    std::size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 11); // header + 10 instances
    CHECK(csv.rfind("label,n,d,i,j,s,", 0) == 0);
}
