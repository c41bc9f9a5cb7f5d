// Exercises the installed command-line surface end to end: flags, formats,
// exit codes. The binary path is injected by the build.
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/aspectra_cli_test.out";
    const std::string err_path = "/tmp/aspectra_cli_test.err";
    const std::string cmd =
        std::string(ASPECTRA_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

TEST_CASE("spectrum subcommand emits the documented record") {
    const RunResult r = run_cli("spectrum --gen complete:4 --alpha 0.5");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["records"].size() == 1);
    const auto& rec = doc["records"][0];
    CHECK(rec["graph"]["graph6"] == "C~");
    CHECK(rec["eigenvalues"][0] == doctest::Approx(3.0));
    CHECK(rec["eigenvalues"][1] == doctest::Approx(1.0));
    CHECK(rec["energy"] == doctest::Approx(3.0));
}

TEST_CASE("alpha lists expand to one record per pair") {
    const RunResult r = run_cli("spectrum --gen cycle:5 --alpha 0,0.5");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["records"].size() == 2);
    CHECK(doc["records"][0]["eigenvalues"][0] == doctest::Approx(2.0));
    CHECK(doc["records"][1]["eigenvalues"][0] == doctest::Approx(2.0));
}

TEST_CASE("csv output carries a header row") {
    const RunResult spectrum = run_cli("spectrum --gen path:3 --alpha 0 --format csv");
    REQUIRE(spectrum.exit_code == 0);
    CHECK(spectrum.out.rfind("graph_index,graph6,n,m,alpha,i,", 0) == 0);
    const RunResult bounds = run_cli("bounds --gen complete:3 --alpha 0.3 --format csv");
    REQUIRE(bounds.exit_code == 0);
    CHECK(bounds.out.rfind("graph_index,graph6,n,m,alpha,bound,", 0) == 0);
}

TEST_CASE("bounds subcommand flags the triangle equality") {
    const RunResult r = run_cli("bounds --gen complete:3 --alpha 0");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& b : doc["records"][0]["report"]["bounds"])
        if (b["name"] == "lower_sn_large") {
            found = true;
            CHECK(b["applicable"] == true);
            CHECK(b["equality"] == true);
        }
    CHECK(found);
}

TEST_CASE("graph6 input files are read line by line") {
    const std::string path = "/tmp/aspectra_cli_test.g6";
    {
        std::ofstream f(path);
        f << "A_\nBw\n";
    }
    const RunResult r = run_cli("spectrum --in " + path + " --alpha 0");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["records"].size() == 2);
    CHECK(doc["records"][0]["graph"]["n"] == 2);
    CHECK(doc["records"][1]["graph"]["n"] == 3);

    {
        std::ofstream f(path);
        f << "A_\nnot-a-record\n";
    }
    const RunResult bad = run_cli("spectrum --in " + path + " --alpha 0");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find(":2:") != std::string::npos);  // line number reported
}

TEST_CASE("srg exit codes distinguish the failure modes") {
    CHECK(run_cli("srg 5 2 0 1 --alpha 0.5 --check").exit_code == 0);
    CHECK(run_cli("srg 5 2 1 1 --alpha 0.5").exit_code == 3);       // infeasible
    CHECK(run_cli("srg 5 2 0 1 --alpha 0.9999999999").exit_code == 4);  // degenerate
    CHECK(run_cli("srg 13 4 1 1 --alpha 0").exit_code == 5);        // non-integral
    CHECK(run_cli("srg 10 3 0 1 --alpha 0,0.3 --check").exit_code == 0);
    CHECK(run_cli("srg 16 5 0 2 --alpha 0.5 --check").exit_code == 2);  // no fixture
}

TEST_CASE("srg check reports the deviation against the numeric spectrum") {
    const RunResult r = run_cli("srg 6 3 0 3 --alpha 0.4 --check");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    const auto& rec = doc["records"][0];
    CHECK(rec["theta1"] == doctest::Approx(1.2));
    CHECK(rec["m1"] == 4);
    CHECK(rec["check"]["max_deviation"].get<double>() < 1e-8);
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(run_cli("verify --n-max 3").exit_code == 0);
    CHECK(run_cli("verify --n-max 9").exit_code == 2);   // above the cap
    CHECK(run_cli("verify --n-max 3 --theorems no_such").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("spectrum --alpha 0.5").exit_code == 2);  // neither --gen nor --in
    CHECK(run_cli("spectrum --gen complete:3 --alpha 2").exit_code == 2);
    CHECK(run_cli("spectrum --gen complete:0 --alpha 0").exit_code == 2);
    CHECK(run_cli("spectrum --gen septagon:7 --alpha 0").exit_code == 2);
}

TEST_CASE("verify census example lists the complete graphs") {
    const RunResult r = run_cli("verify --n-max 4 --theorems two_distinct");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["theorems"].size() == 1);
    const auto& witnesses = doc["theorems"][0]["equality_witnesses"];
    CHECK(witnesses.size() == 30);  // K2, K3, K4 across ten alphas
}

TEST_CASE("identical invocations are byte-identical") {
    const RunResult a = run_cli("verify --n-max 4 --jobs 2");
    const RunResult b = run_cli("verify --n-max 4 --jobs 2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    // json round-trips through a generic parser without loss
    const auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.dump() == nlohmann::json::parse(doc.dump()).dump());
}
