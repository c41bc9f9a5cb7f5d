#include "doctest.h"

#include <set>

#include <aspectra/graph6.hpp>
#include <aspectra/verify.hpp>

using namespace aspectra;

TEST_CASE("labeled enumeration counts") {
    CHECK(count_graphs(2, false) == 2);
    CHECK(count_graphs(2, true) == 1);
    CHECK(count_graphs(3, false) == 8);
    CHECK(count_graphs(3, true) == 4);
    CHECK(count_graphs(4, false) == 64);
    CHECK(count_graphs(4, true) == 38);
    CHECK(count_graphs(5, true) == 728);
    CHECK_THROWS_AS(count_graphs(8, false), std::invalid_argument);
    CHECK_THROWS_AS(count_graphs(1, false), std::invalid_argument);
}

TEST_CASE("enumeration is deterministic and bitmask-ordered") {
    std::vector<std::uint64_t> masks;
    enumerate_graphs(3, false, [&](const Graph&, std::uint64_t mask) { masks.push_back(mask); });
    REQUIRE(masks.size() == 8);
    for (std::size_t i = 0; i < masks.size(); ++i) CHECK(masks[i] == i);
}

TEST_CASE("suite passes with zero violations at order four") {
    SweepConfig cfg;
    cfg.n_max = 4;
    const VerificationReport report = run_suite(cfg);
    CHECK(report.passed);
    for (const auto& r : report.results) CHECK(r.violations.empty());
    CHECK(report.results.size() == registered_theorems().size());
}

TEST_CASE("two-eigenvalue witnesses are the complete graphs") {
    SweepConfig cfg;
    cfg.n_max = 4;
    cfg.theorem_ids = {"two_distinct"};
    const VerificationReport report = run_suite(cfg);
    REQUIRE(report.results.size() == 1);
    std::set<std::string> graphs;
    for (const auto& w : report.results[0].equality_witnesses) graphs.insert(w.graph6);
    CHECK(graphs == std::set<std::string>{"A_", "Bw", "C~"});
}

TEST_CASE("triangle is the only wide-threshold witness") {
    SweepConfig cfg;
    cfg.n_max = 5;
    const auto witnesses = find_equality_witnesses("bound_lower_sn_large", cfg);
    REQUIRE(witnesses.size() == 10);
    for (const auto& w : witnesses) {
        CHECK(w.graph6 == "Bw");
        CHECK(w.classification == "complete_graph");
    }
}

TEST_CASE("parallel runs merge deterministically") {
    SweepConfig base;
    base.n_max = 4;
    SweepConfig threaded = base;
    threaded.jobs = 3;
    const std::string a = to_json(run_suite(base));
    const std::string b = to_json(run_suite(threaded));
    CHECK(a == b);
    CHECK(a == to_json(run_suite(base)));
}

TEST_CASE("config validation") {
    SweepConfig cfg;
    cfg.n_max = 9;
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
    cfg.n_max = 4;
    cfg.alpha_grid = {1.0};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
    cfg.alpha_grid = {0.5};
    cfg.theorem_ids = {"no_such_check"};
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
    cfg.theorem_ids = {};
    cfg.jobs = 0;
    CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("theorem filter narrows the report") {
    SweepConfig cfg;
    cfg.n_max = 3;
    cfg.theorem_ids = {"moment_identities", "graph6_roundtrip"};
    const VerificationReport report = run_suite(cfg);
    REQUIRE(report.results.size() == 2);
    CHECK(report.results[0].id == "graph6_roundtrip");
    CHECK(report.results[1].id == "moment_identities");
    CHECK(report.results[1].graphs_tested == (8 + 2) * 10);
}

TEST_CASE("connected-only sweeps skip disconnected graphs") {
    SweepConfig cfg;
    cfg.n_max = 4;
    cfg.connected_only = true;
    cfg.theorem_ids = {"graph6_roundtrip"};
    const VerificationReport report = run_suite(cfg);
    CHECK(report.results[0].graphs_tested == 1 + 4 + 38);
}

TEST_CASE("serialized report structure") {
    SweepConfig cfg;
    cfg.n_max = 3;
    const VerificationReport report = run_suite(cfg);
    const std::string json = to_json(report);
    CHECK(json.find("\"n_max\": 3") != std::string::npos);
    CHECK(json.find("\"passed\": true") != std::string::npos);
    CHECK(json.find("graph6_roundtrip") != std::string::npos);
    const std::string csv = violations_csv(report);
    CHECK(csv.rfind("theorem,graph6,alpha,detail,measured\n", 0) == 0);
}

TEST_CASE("witness records replay through the bounds module") {
    SweepConfig cfg;
    cfg.n_max = 4;
    cfg.theorem_ids = {"bound_upper_main"};
    const VerificationReport report = run_suite(cfg);
    for (const auto& w : report.results[0].equality_witnesses) {
        const Graph g = parse_graph6(w.graph6);
        const BoundReport rep = full_report(g, w.alpha);
        const BoundValue* b = rep.find("upper_main");
        REQUIRE(b != nullptr);
        CHECK(std::abs(b->slack) <= 1e-10);
        CHECK(b->equality);
    }
}

TEST_CASE("rounding helper clips to twelve significant digits") {
    CHECK(round_sig12(0.0) == 0.0);
    CHECK(round_sig12(1.0 / 3.0) == 0.333333333333);
    CHECK(round_sig12(-2.5e-13) == -2.5e-13);
    CHECK(round_sig12(123456789012345.0) == 123456789012000.0);
}
