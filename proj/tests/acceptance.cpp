// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Pass --cli <path> so the determinism criterion can invoke the real binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <aspectra/bounds.hpp>
#include <aspectra/closed_forms.hpp>
#include <aspectra/graph.hpp>
#include <aspectra/graph6.hpp>
#include <aspectra/spectra.hpp>
#include <aspectra/verify.hpp>

using namespace aspectra;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kTol = 1e-8;

int failures = 0;

void criterion(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("[%2d/10] %s %-34s (%.2fs)%s%s\n", index, ok ? "PASS" : "FAIL", name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::vector<double> grid() { return default_alpha_grid(); }

bool multiset_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    // One full sweep backs criteria 3 through 9.
    const auto sweep_start = Clock::now();
    SweepConfig cfg;
    cfg.n_max = 6;
    cfg.jobs = 4;
    const VerificationReport sweep = run_suite(cfg);
    const double sweep_secs = std::chrono::duration<double>(Clock::now() - sweep_start).count();
    std::printf("full sweep: %d labeled orders 2..6, %zu checks, %.2fs with %d workers\n",
                cfg.n_max, sweep.results.size(), sweep_secs, cfg.jobs);

    auto zero_violations = [&](const char* id, std::string& detail) {
        const TheoremResult* r = sweep.find(id);
        if (!r) {
            detail = std::string(id) + " missing from report";
            return false;
        }
        if (!r->violations.empty()) {
            detail = std::string(id) + ": " + std::to_string(r->violations.size()) +
                     " violations, first on " + r->violations.front().graph6;
            return false;
        }
        return true;
    };

    criterion(1, "srg-closed-form-vs-numeric", [&](std::string& detail) {
        struct Fixture {
            SrgParams p;
            Graph g;
        };
        const Fixture fixtures[] = {{{5, 2, 0, 1}, cycle_graph(5)},
                                    {{10, 3, 0, 1}, petersen_graph()},
                                    {{6, 3, 0, 3}, complete_bipartite(3, 3)}};
        for (const auto& f : fixtures)
            for (double alpha : grid()) {
                const SrgSpectrum closed = srg_alpha_spectrum(f.p, alpha);
                std::vector<double> values{closed.r_eig};
                values.insert(values.end(), closed.m1, closed.theta1);
                values.insert(values.end(), closed.m2, closed.theta2);
                if (!multiset_close(values, spectrum(f.g, alpha).p, kTol)) {
                    detail = "mismatch at n=" + std::to_string(f.p.n) +
                             " alpha=" + std::to_string(alpha);
                    return false;
                }
            }
        return true;
    });

    criterion(2, "complete-graph-spectrum", [&](std::string& detail) {
        for (int n = 2; n <= 8; ++n)
            for (double alpha : grid()) {
                std::vector<double> expect{n - 1.0};
                expect.insert(expect.end(), n - 1, alpha * n - 1.0);
                if (!multiset_close(expect, spectrum(complete_graph(n), alpha).p, kTol)) {
                    detail = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
        return true;
    });

    criterion(3, "moment-identities", [&](std::string& detail) {
        const TheoremResult* r = sweep.find("moment_identities");
        if (r && r->graphs_tested != 33866 * 10) {
            detail = "unexpected pair count " + std::to_string(r->graphs_tested);
            return false;
        }
        return zero_violations("moment_identities", detail);
    });

    criterion(4, "spectral-radius-sandwich", [&](std::string& detail) {
        return zero_violations("radius_sandwich", detail) &&
               zero_violations("radius_mean_lb", detail);
    });

    criterion(5, "two-eigenvalue-characterization", [&](std::string& detail) {
        if (!zero_violations("two_distinct", detail)) return false;
        const TheoremResult* r = sweep.find("two_distinct");
        std::set<std::string> witnesses;
        for (const auto& w : r->equality_witnesses) {
            if (!is_complete(parse_graph6(w.graph6))) {
                detail = "non-complete witness " + w.graph6;
                return false;
            }
            witnesses.insert(w.graph6);
        }
        if (witnesses.size() != 5 || r->equality_witnesses.size() != 50) {
            detail = "expected the five complete graphs at ten alphas, got " +
                     std::to_string(r->equality_witnesses.size());
            return false;
        }
        return true;
    });

    criterion(6, "energy-merging", [&](std::string& detail) {
        return zero_violations("energy_merging", detail);
    });

    criterion(7, "bound-suite", [&](std::string& detail) {
        for (const char* id :
             {"bound_lower_strict", "bound_lower_two_level", "bound_lower_sn_large",
              "bound_lower_sn_small", "bound_lower_sn_zero", "bound_lower_sn_zero_degree",
              "bound_lower_regular", "bound_upper_main", "bound_upper_zagreb",
              "bound_upper_regular", "ordered_sum", "psd_half", "radius_simple",
              "three_value_regular"})
            if (!zero_violations(id, detail)) return false;

        // upper_main equality witnesses: exactly the perfect matchings, each
        // at every grid alpha.
        std::map<std::string, int> matching_expected;
        for (int n = 2; n <= 6; n += 2)
            enumerate_graphs(n, false, [&](const Graph& g, std::uint64_t) {
                if (is_perfect_matching(g)) matching_expected[write_graph6(g)] = 0;
            });
        const TheoremResult* um = sweep.find("bound_upper_main");
        for (const auto& w : um->equality_witnesses) {
            auto it = matching_expected.find(w.graph6);
            if (it == matching_expected.end()) {
                detail = "upper_main witness " + w.graph6 + " is not a matching";
                return false;
            }
            ++it->second;
        }
        for (const auto& [g6, count] : matching_expected)
            if (count != static_cast<int>(grid().size())) {
                detail = "matching " + g6 + " appeared " + std::to_string(count) + " times";
                return false;
            }

        // wide-threshold witnesses: the triangle at every alpha, with the
        // exact 4(1-alpha) energy.
        const TheoremResult* snl = sweep.find("bound_lower_sn_large");
        if (snl->equality_witnesses.size() != grid().size()) {
            detail = "triangle witness count " + std::to_string(snl->equality_witnesses.size());
            return false;
        }
        for (const auto& w : snl->equality_witnesses) {
            if (w.graph6 != "Bw") {
                detail = "unexpected wide-threshold witness " + w.graph6;
                return false;
            }
            const double energy = spectrum(parse_graph6(w.graph6), w.alpha).energy;
            if (std::abs(energy - 4.0 * (1.0 - w.alpha)) > kTol) {
                detail = "triangle energy mismatch at alpha " + std::to_string(w.alpha);
                return false;
            }
        }

        // regular branch of the zero-deviation refinement: exactly the
        // balanced complete bipartite graphs in the sweep.
        std::map<std::string, int> balanced_expected;
        for (int n = 4; n <= 6; n += 2)
            enumerate_graphs(n, false, [&](const Graph& g, std::uint64_t) {
                if (is_balanced_complete_bipartite(g)) balanced_expected[write_graph6(g)] = 0;
            });
        const TheoremResult* pw = sweep.find("bound_lower_sn_zero_degree");
        for (const auto& w : pw->equality_witnesses) {
            auto it = balanced_expected.find(w.graph6);
            if (it == balanced_expected.end()) {
                detail = "regular-branch witness " + w.graph6 + " is not balanced bipartite";
                return false;
            }
            ++it->second;
        }
        for (const auto& [g6, count] : balanced_expected)
            if (count != static_cast<int>(grid().size())) {
                detail = "balanced graph " + g6 + " appeared " + std::to_string(count) + " times";
                return false;
            }
        return true;
    });

    criterion(8, "zagreb-and-trace-bounds", [&](std::string& detail) {
        return zero_violations("zagreb_bounds", detail) && zero_violations("trace_radius", detail);
    });

    criterion(9, "graph6-round-trip", [&](std::string& detail) {
        if (!zero_violations("graph6_roundtrip", detail)) return false;
        const Graph k1 = parse_graph6("@");
        const Graph k2 = parse_graph6("A_");
        const Graph b = parse_graph6("B_");
        if (k1.order() != 1 || k1.size() != 0) {
            detail = "'@' decode";
            return false;
        }
        if (k2.order() != 2 || !k2.adjacent(0, 1) || write_graph6(k2) != "A_") {
            detail = "'A_' decode";
            return false;
        }
        if (b.order() != 3 || b.size() != 1 || !b.adjacent(0, 1)) {
            detail = "'B_' decode";
            return false;
        }
        return true;
    });

    criterion(10, "verify-determinism", [&](std::string& detail) {
        if (cli_path.empty()) {
            detail = "pass --cli <path-to-aspectra> to run this criterion";
            return false;
        }
        const std::string out1 = "/tmp/aspectra_acceptance_1.json";
        const std::string out2 = "/tmp/aspectra_acceptance_2.json";
        for (const std::string& out : {out1, out2}) {
            const std::string cmd = cli_path + " verify --n-max 5 >" + out + " 2>/dev/null";
            const int status = std::system(cmd.c_str());
            if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
                detail = "verify --n-max 5 exited nonzero";
                return false;
            }
        }
        const std::string a = slurp(out1);
        const std::string b = slurp(out2);
        if (a.empty() || a != b) {
            detail = "outputs differ or are empty";
            return false;
        }
        return true;
    });

    if (failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
