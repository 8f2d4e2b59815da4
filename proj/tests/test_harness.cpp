#include "wg/errors.hpp"
#include "wg/harness.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace wg;

namespace {

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("euler interval") {
    CHECK(euler_lower() < euler_upper());
    CHECK(euler_upper() - euler_lower() == Rat(1, Int("100000000000000000000000000000000000000000000000000")));
    // 2.718281828 < e < 2.718281829
    CHECK(euler_lower() > Rat(2718281828, 1000000000));
    CHECK(euler_upper() < Rat(2718281829, 1000000000));
}

TEST_CASE("main theorem rows") {
    auto rows = check_theorem_main(2, Rat(100000));
    CHECK(rows.size() == 4); // two classes, upper + lower
    CHECK(all_met_pass(rows));
    for (const auto &r : rows)
        CHECK(r.hypothesis_met);

    // at n = 1 the unique ratio is exactly 1
    auto unit = check_theorem_main(1, Rat(50));
    for (const auto &r : unit) {
        if (r.claim == "unitary-moebius-ratio-upper")
            CHECK(r.lhs == "1");
        CHECK(r.satisfied);
    }

    // hypothesis-unmet instances are flagged but still evaluated
    auto tight = check_theorem_main(3, Rat(100));
    bool saw_unmet = false;
    for (const auto &r : tight)
        saw_unmet = saw_unmet || !r.hypothesis_met;
    CHECK(saw_unmet);

    // N = 40000 sits just above the n = 4 gate (40000^4 >= 288e12 * 4^6)
    auto edge = check_theorem_main(4, Rat(40000));
    CHECK(all_met_pass(edge));
    for (const auto &r : edge)
        CHECK(r.hypothesis_met);
}

TEST_CASE("orthogonal theorem rows") {
    auto rows = check_theorem_orthogonal(2, Rat(10000000));
    CHECK(all_met_pass(rows));
    CHECK(rows.size() == 4); // two cosets x (orthogonal + symplectic)
    for (const auto &r : rows)
        CHECK(r.hypothesis_met);

    auto unit = check_theorem_orthogonal(1, Rat(3000000));
    for (const auto &r : unit) {
        CHECK(r.satisfied);
        if (r.claim == "orthogonal-moebius-ratio")
            CHECK(r.lhs == "1");
    }
}

TEST_CASE("small-permutation deviation rows") {
    auto rows = check_small_perm(6, 2, {Rat(1000)});
    CHECK(all_met_pass(rows));
    bool saw_min_constant = false;
    for (const auto &r : rows) {
        CHECK(r.hypothesis_met);
        CHECK(r.exact);
        saw_min_constant = saw_min_constant || r.note.find("min-constant=") == 0;
    }
    CHECK(saw_min_constant);
    // below the gate everything is flagged
    auto low = check_small_perm(3, 2, {Rat(10)});
    for (const auto &r : low)
        CHECK(!r.hypothesis_met);
}

TEST_CASE("log-deviation rows") {
    auto rows5 = check_log_bound(5, Rat(10000));
    CHECK(rows5.size() == 1); // only class (5) has norm >= 4
    CHECK(rows5[0].label == "5");
    CHECK(rows5[0].satisfied);
    CHECK(!rows5[0].hypothesis_met); // n > 1e-4 N^{4/5} here

    auto rows6 = check_log_bound(6, Rat(10000));
    bool saw33 = false;
    for (const auto &r : rows6) {
        CHECK(r.satisfied);
        saw33 = saw33 || r.label == "3,3";
    }
    CHECK(saw33);
}

TEST_CASE("path ratio rows") {
    auto rows1 = check_path_ratio_bounds(1, 200, 7);
    CHECK(all_met_pass(rows1));
    for (const auto &r : rows1)
        if (r.claim == "single-defect-cap" || r.claim == "minor-defect-cap")
            CHECK(r.lhs == "0");

    auto rows2 = check_path_ratio_bounds(2, 300, 7);
    CHECK(all_met_pass(rows2));
    for (const auto &r : rows2)
        if (r.claim == "single-defect-cap" && r.label == "1,1")
            CHECK(r.lhs == "1"); // |P(id_2, 2)| / |P(id_2, 0)|

    auto rows3 = check_path_ratio_bounds(3, 500, 7);
    CHECK(all_met_pass(rows3));
    bool saw_minor = false, saw_major = false, saw_mc = false;
    for (const auto &r : rows3) {
        saw_minor = saw_minor || r.claim == "minor-defect-cap";
        saw_major = saw_major || r.claim == "major-defect-cap";
        saw_mc = saw_mc || r.claim == "single-defect-vs-cycle-sum";
    }
    CHECK(saw_minor);
    CHECK(saw_major);
    CHECK(saw_mc);
    CHECK_THROWS_AS(check_path_ratio_bounds(7, 10, 1), CapError);
}

TEST_CASE("process rows") {
    auto rows = check_process(parse_partition("8"), 200, 7);
    CHECK(rows.size() == 3);
    CHECK(all_met_pass(rows));
    auto degenerate = check_process(parse_partition("4"), 50, 7);
    for (const auto &r : degenerate)
        if (r.claim == "time-to-halve")
            CHECK(!r.hypothesis_met);

    // the worked coupon-tail instance: lambda = (30,30), i = 0, t = 20
    auto tail = check_process(parse_partition("30,30"), 400, 11, 0, 20);
    CHECK(all_met_pass(tail));
    bool saw_tail = false;
    for (const auto &r : tail) {
        if (r.claim == "coupon-gap-tail") {
            saw_tail = true;
            CHECK(r.hypothesis_met);
            CHECK(r.satisfied);
        }
    }
    CHECK(saw_tail);
}

TEST_CASE("energy rows") {
    auto rows = check_energy(3, Rat(10000), {Rat(3, 5), Rat(9, 10)}, 4, 2024);
    CHECK(rows.size() == 10);
    CHECK(all_met_pass(rows));
    for (const auto &r : rows)
        CHECK(r.hypothesis_met);
    // gamma outside (1/2, 1) is flagged
    auto out = check_energy(2, Rat(10000), {Rat(1, 4)}, 1, 2024);
    for (const auto &r : out)
        CHECK(!r.hypothesis_met);
}

TEST_CASE("report emission and lossless round trips") {
    auto rows = check_theorem_main(2, Rat(1000));
    for (ReportFormat fmt : {ReportFormat::Json, ReportFormat::Csv}) {
        std::string text = report_to_string(rows, fmt);
        auto parsed = parse_report(text, fmt);
        CHECK(parsed.size() == rows.size());
        CHECK(report_to_string(parsed, fmt) == text);
    }
    // mixed exact/float rows, including notes that contain commas
    auto mixed = check_path_ratio_bounds(2, 100, 5);
    auto proc = check_process(parse_partition("7"), 50, 5);
    mixed.insert(mixed.end(), proc.begin(), proc.end());
    for (ReportFormat fmt : {ReportFormat::Json, ReportFormat::Csv}) {
        std::string text = report_to_string(mixed, fmt);
        CHECK(report_to_string(parse_report(text, fmt), fmt) == text);
    }
    // empty report: header-only CSV, empty JSON array
    std::string empty_csv = report_to_string({}, ReportFormat::Csv);
    CHECK(empty_csv ==
          "claim,n,N,label,exact,lhs,rhs,satisfied,hypothesis_met,slack_ratio,note\n");
    CHECK(parse_report(empty_csv, ReportFormat::Csv).empty());
    std::string empty_json = report_to_string({}, ReportFormat::Json);
    CHECK(parse_report(empty_json, ReportFormat::Json).empty());
}

TEST_CASE("golden report for the main theorem at n = 3, N = 1e5") {
    auto rows = check_theorem_main(3, Rat(100000));
    CHECK(all_met_pass(rows));
    std::string text = report_to_string(rows, ReportFormat::Json);
    std::string golden = read_file(std::string(WG_GOLDEN_DIR) + "/verify_main_n3.json");
    CHECK(text == golden);
}
