#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "qsc/registry.hpp"
#include "qsc/report_json.hpp"

using namespace qsc::checks;

TEST_CASE("registry covers the full claim inventory, one id per claim") {
    // Canonical claim list: one entry per theorem / lemma / corollary /
    // equation / tightness remark in scope.
    const std::vector<std::string> claims{
        "T1.1",                                                       // power-of-two blanket
        "T2.1", "T2.2",  "T2.3",  "INFO.2.3", "T2.4", "TIGHT.2.4",    // mod-2^m classification
        "T2.5", "T2.6",  "T2.7",                                      // theta lemmas
        "T2.8", "TIGHT.2.8", "T2.9", "TIGHT.2.9",                     // deep congruences
        "T3.1", "T3.2",  "T3.3",  "T3.4", "T3.5", "T3.6", "T3.7",     // mod 9 chapter
        "T3.8", "T3.9",  "T3.10",                                     // density + s,t identities
        "T4.1", "T4.2",  "T4.3",  "T4.4", "T4.5", "T4.6", "T4.7",     // mod 7 chapter
        "T4.8", "T4.9",  "T4.10",                                     // families + density
        "T4.11", "T4.12", "T4.13", "T4.14", "T4.15", "T4.16",         // mod 11 chapter
    };
    std::set<std::string> expected(claims.begin(), claims.end());
    std::set<std::string> registered;
    for (const auto& c : registry()) registered.insert(c.id);
    CHECK(registered == expected);
    CHECK(registry().size() == claims.size());
}

TEST_CASE("glob matching") {
    CHECK(glob_match("T2.*", "T2.8"));
    CHECK(glob_match("*", "TIGHT.2.9"));
    CHECK(glob_match("T?.1", "T4.1"));
    CHECK_FALSE(glob_match("T2.*", "T3.4"));
    CHECK_FALSE(glob_match("T2.1", "T2.10"));
    CHECK(match_checks("NOSUCH").empty());
    CHECK(match_checks("TIGHT.*").size() == 3);
}

TEST_CASE("quick profile: the whole power-of-two chapter passes") {
    auto reports = run_registry("T2.*", Profile::quick);
    CHECK(reports.size() == 9);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.status == CheckStatus::pass);
        if (r.first_counterexample) {
            CAPTURE(r.first_counterexample->n);
            CAPTURE(r.first_counterexample->observed.get_str());
        }
        CHECK(r.checked_count > 0);
    }
}

TEST_CASE("tightness checks pass by failing at the documented witnesses") {
    auto reports = run_registry("TIGHT.*", Profile::quick);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK(r.status == CheckStatus::pass);
    }
    const auto& t28 = reports[1]; // registry order: TIGHT.2.4, TIGHT.2.8, TIGHT.2.9
    CHECK(t28.id == "TIGHT.2.8");
    REQUIRE(t28.first_counterexample.has_value());
    CHECK(t28.first_counterexample->n == 0);
    CHECK(t28.first_counterexample->observed == 32);
    const auto& t29 = reports[2];
    CHECK(t29.id == "TIGHT.2.9");
    REQUIRE(t29.first_counterexample.has_value());
    CHECK(t29.first_counterexample->observed == 64);
}

TEST_CASE("T3.5 passes in any profile") {
    auto reports = run_registry("T3.5", Profile::quick);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == CheckStatus::pass);
}

TEST_CASE("reports are deterministic (elapsed aside)") {
    auto a = run_registry("T2.8", Profile::quick);
    auto b = run_registry("T2.8", Profile::quick);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].id == b[0].id);
    CHECK(a[0].status == b[0].status);
    CHECK(a[0].checked_count == b[0].checked_count);
    CHECK(a[0].bound == b[0].bound);
    CHECK(a[0].detail == b[0].detail);
    CHECK(a[0].first_counterexample.has_value() == b[0].first_counterexample.has_value());
}

TEST_CASE("parallel execution matches sequential") {
    auto seq = run_registry("T4.1?", Profile::quick, 1);  // T4.10 .. T4.16
    auto par = run_registry("T4.1?", Profile::quick, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].id == par[i].id);
        CHECK(seq[i].status == par[i].status);
        CHECK(seq[i].checked_count == par[i].checked_count);
        CHECK(seq[i].bound == par[i].bound);
    }
}

TEST_CASE("verify verdict: failures and promised budget skips gate the exit code") {
    VerificationReport pass;
    pass.id = "T2.8";
    pass.status = CheckStatus::pass;
    VerificationReport fail = pass;
    fail.status = CheckStatus::fail;
    VerificationReport info_fail = fail;
    info_fail.id = "INFO.2.3"; // informational: never gates
    VerificationReport skipped = pass;
    skipped.status = CheckStatus::skipped_budget;

    CHECK(verify_exit_code({pass}, Profile::standard) == 0);
    CHECK(verify_exit_code({pass, fail}, Profile::standard) == 1);
    CHECK(verify_exit_code({info_fail}, Profile::standard) == 0);
    CHECK(verify_exit_code({pass, info_fail}, Profile::quick) == 0);
    // every registered check promises from quick, so a skip always gates
    CHECK(verify_exit_code({skipped}, Profile::quick) == 1);
    CHECK(verify_exit_code({skipped}, Profile::deep) == 1);
}

TEST_CASE("mod-7 pointwise relation also holds at n = 0 (informational)") {
    // The theorem is stated from n = 1; at n = 0 both sides are 1.
    auto op7 = qsc::counting::overpartition_series(3, qsc::CoefficientRing::modular(7), 10);
    auto r3 = qsc::counting::rk_series(3, qsc::CoefficientRing::modular(7), 10);
    CHECK(op7.series().mod_at(0) == 1);
    CHECK(r3.series().mod_at(0) == 1);
}

TEST_CASE("report JSON round trip") {
    VerificationReport r;
    r.id = "T2.8";
    r.status = CheckStatus::fail;
    r.checked_count = 42;
    r.bound = 99;
    r.first_counterexample = Counterexample{3, mpz_class("123456789012345678901234567890"),
                                            mpz_class(0)};
    r.elapsed_ms = 17;
    auto j = report_to_json(r);
    auto back = report_from_json(j);
    CHECK(back.id == r.id);
    CHECK(back.status == r.status);
    CHECK(back.checked_count == r.checked_count);
    CHECK(back.bound == r.bound);
    REQUIRE(back.first_counterexample.has_value());
    CHECK(back.first_counterexample->observed == r.first_counterexample->observed);
    CHECK(back.elapsed_ms == 17);
}

TEST_CASE("merge rule: larger bound wins per id") {
    VerificationReport small;
    small.id = "T2.8";
    small.status = CheckStatus::pass;
    small.checked_count = 10;
    small.bound = 100;
    VerificationReport large = small;
    large.checked_count = 99;
    large.bound = 5000;

    auto fileA = report_file_json({small}, "quick");
    auto fileB = report_file_json({large}, "deep");
    auto merged = merge_report_files({fileA, fileB});
    REQUIRE(merged.merged.size() == 1);
    CHECK(merged.merged[0].bound == 5000);
    CHECK(merged.pass == 1);
    CHECK(merged.fail == 0);

    auto empty = merge_report_files({});
    CHECK(empty.merged.empty());
    CHECK(empty.files == 0);
}
