// Command-line front end: spectra, energies, bound reports, closed-form
// strongly-regular spectra, and the exhaustive verification suite.
//
// Exit codes:
//   0  success
//   1  data or verification failure (graph6 parse error, suite violations)
//   2  usage / configuration error
//   3  infeasible strongly-regular parameters
//   4  degenerate discriminant (eigenvalue split undefined)
//   5  non-integral multiplicities

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <aspectra/bounds.hpp>
#include <aspectra/closed_forms.hpp>
#include <aspectra/graph.hpp>
#include <aspectra/graph6.hpp>
#include <aspectra/spectra.hpp>
#include <aspectra/verify.hpp>

using aspectra::Graph;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ordered_json num(double v) { return aspectra::round_sig12(v); }

struct InputGraph {
    Graph g;
    std::string source;
    std::string g6;
};

Graph parse_generator(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw UsageError("empty generator spec");
    auto intarg = [&](std::size_t i) {
        if (i >= parts.size()) throw UsageError("generator '" + parts[0] + "' needs more parameters");
        try {
            return std::stoi(parts[i]);
        } catch (const std::exception&) {
            throw UsageError("generator parameter '" + parts[i] + "' is not an integer");
        }
    };
    try {
        if (parts[0] == "complete") return aspectra::complete_graph(intarg(1));
        if (parts[0] == "bipartite") return aspectra::complete_bipartite(intarg(1), intarg(2));
        if (parts[0] == "cycle") return aspectra::cycle_graph(intarg(1));
        if (parts[0] == "path") return aspectra::path_graph(intarg(1));
        if (parts[0] == "matching") return aspectra::matching_union(intarg(1));
        if (parts[0] == "petersen") return aspectra::petersen_graph();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown generator '" + parts[0] +
                     "' (expected complete:n, bipartite:a:b, cycle:n, path:n, matching:k, petersen)");
}

std::vector<InputGraph> load_graphs(const std::string& gen, const std::string& in_file) {
    if (gen.empty() == in_file.empty())
        throw UsageError("exactly one of --gen and --in is required");
    std::vector<InputGraph> graphs;
    if (!gen.empty()) {
        Graph g = parse_generator(gen);
        graphs.push_back({g, "gen:" + gen, aspectra::write_graph6(g)});
        return graphs;
    }
    std::ifstream file(in_file);
    if (!file) throw DataError("cannot open '" + in_file + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            Graph g = aspectra::parse_graph6(line);
            graphs.push_back({g, in_file + ":" + std::to_string(lineno), line});
        } catch (const aspectra::Graph6Error& e) {
            throw DataError(in_file + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (graphs.empty()) throw DataError("'" + in_file + "' contains no graph6 records");
    return graphs;
}

void validate_alphas(const std::vector<double>& alphas, bool allow_one) {
    if (alphas.empty()) throw UsageError("at least one --alpha value is required");
    for (double a : alphas) {
        const double hi = allow_one ? 1.0 : 1.0 - 1e-15;
        if (!(a >= 0.0 && a <= hi))
            throw UsageError("alpha " + fmt12(a) + " outside the supported range");
    }
}

ordered_json graph_header(const InputGraph& in, int index) {
    ordered_json j;
    j["index"] = index;
    j["source"] = in.source;
    j["graph6"] = in.g6;
    j["n"] = in.g.order();
    j["m"] = in.g.size();
    return j;
}

int cmd_spectrum(const std::string& gen, const std::string& in_file,
                 const std::vector<double>& alphas, const std::string& format) {
    const auto graphs = load_graphs(gen, in_file);
    validate_alphas(alphas, true);
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "spectrum";
        ordered_json records = ordered_json::array();
        int index = 0;
        for (const auto& in : graphs) {
            for (double alpha : alphas) {
                const aspectra::Spectrum sp = aspectra::spectrum(in.g, alpha);
                ordered_json rec;
                rec["graph"] = graph_header(in, index);
                rec["alpha"] = num(alpha);
                ordered_json p = ordered_json::array(), eta = ordered_json::array(),
                             s = ordered_json::array();
                for (double v : sp.p) p.push_back(num(v));
                for (double v : sp.eta) eta.push_back(num(v));
                for (double v : sp.s) s.push_back(num(v));
                rec["eigenvalues"] = p;
                rec["mean_shift"] = num(sp.mean_shift);
                rec["eta"] = eta;
                rec["s"] = s;
                rec["energy"] = num(sp.energy);
                ordered_json clusters = ordered_json::array();
                for (const auto& [v, mult] : aspectra::distinct_eigenvalues(sp))
                    clusters.push_back(ordered_json::array({num(v), mult}));
                rec["clusters"] = clusters;
                records.push_back(rec);
            }
            ++index;
        }
        doc["records"] = records;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "graph_index,graph6,n,m,alpha,i,eigenvalue,eta,s,energy,mean_shift\n";
        int index = 0;
        for (const auto& in : graphs) {
            for (double alpha : alphas) {
                const aspectra::Spectrum sp = aspectra::spectrum(in.g, alpha);
                for (int i = 0; i < in.g.order(); ++i)
                    std::cout << index << ',' << in.g6 << ',' << in.g.order() << ','
                              << in.g.size() << ',' << fmt12(alpha) << ',' << i + 1 << ','
                              << fmt12(sp.p[i]) << ',' << fmt12(sp.eta[i]) << ','
                              << fmt12(sp.s[i]) << ',' << fmt12(sp.energy) << ','
                              << fmt12(sp.mean_shift) << "\n";
            }
            ++index;
        }
    }
    return 0;
}

int cmd_bounds(const std::string& gen, const std::string& in_file,
               const std::vector<double>& alphas, const std::string& format) {
    const auto graphs = load_graphs(gen, in_file);
    validate_alphas(alphas, true);
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "bounds";
        ordered_json records = ordered_json::array();
        int index = 0;
        for (const auto& in : graphs) {
            for (double alpha : alphas) {
                const aspectra::BoundReport rep = aspectra::full_report(in.g, alpha);
                ordered_json rec;
                rec["graph"] = graph_header(in, index);
                rec["report"] = ordered_json::parse(aspectra::to_json(rep));
                records.push_back(rec);
            }
            ++index;
        }
        doc["records"] = records;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "graph_index,graph6,n,m,alpha,bound,direction,applicable,value,"
                     "satisfied,slack,equality,energy,y,c,classification\n";
        int index = 0;
        for (const auto& in : graphs) {
            for (double alpha : alphas) {
                const aspectra::BoundReport rep = aspectra::full_report(in.g, alpha);
                for (const auto& b : rep.bounds) {
                    std::cout << index << ',' << in.g6 << ',' << in.g.order() << ','
                              << in.g.size() << ',' << fmt12(alpha) << ',' << b.name << ','
                              << (b.is_upper ? "upper" : "lower") << ','
                              << (b.applicable ? "yes" : "no") << ',';
                    if (b.applicable)
                        std::cout << fmt12(b.value) << ',' << (b.satisfied ? "yes" : "no") << ','
                                  << fmt12(b.slack) << ',' << (b.equality ? "yes" : "no");
                    else
                        std::cout << ",,,";
                    std::cout << ',' << fmt12(rep.energy) << ',' << fmt12(rep.y) << ','
                              << fmt12(rep.c_threshold) << ','
                              << aspectra::to_string(rep.shape.classification) << "\n";
                }
            }
            ++index;
        }
    }
    return 0;
}

int cmd_srg(int n, int r, int a, int c, const std::vector<double>& alphas, bool check,
            const std::string& format) {
    validate_alphas(alphas, false);
    const aspectra::SrgParams params{n, r, a, c};
    std::optional<Graph> fixture;
    std::string family;
    if (check) {
        if (n == 5 && r == 2 && a == 0 && c == 1) {
            fixture = aspectra::cycle_graph(5);
            family = "cycle_5";
        } else if (n == 10 && r == 3 && a == 0 && c == 1) {
            fixture = aspectra::petersen_graph();
            family = "petersen";
        } else if (n == 6 && r == 3 && a == 0 && c == 3) {
            fixture = aspectra::complete_bipartite(3, 3);
            family = "balanced_bipartite_3";
        } else {
            throw UsageError("--check supports only the constructible tuples "
                             "(5,2,0,1), (10,3,0,1) and (6,3,0,3)");
        }
    }

    ordered_json records = ordered_json::array();
    std::ostringstream csv;
    csv << "n,r,a,c,alpha,eigenvalue_r,B,C,d,theta1,m1,theta2,m2,check_max_deviation\n";
    for (double alpha : alphas) {
        const aspectra::SrgSpectrum sp = aspectra::srg_alpha_spectrum(params, alpha);
        double max_dev = -1.0;
        if (fixture) {
            const aspectra::Spectrum numeric = aspectra::spectrum(*fixture, alpha);
            std::vector<double> closed{sp.r_eig};
            for (int i = 0; i < sp.m1; ++i) closed.push_back(sp.theta1);
            for (int i = 0; i < sp.m2; ++i) closed.push_back(sp.theta2);
            std::sort(closed.begin(), closed.end(), std::greater<>());
            max_dev = 0.0;
            for (int i = 0; i < n; ++i)
                max_dev = std::max(max_dev, std::abs(closed[i] - numeric.p[i]));
        }
        if (format == "json") {
            ordered_json rec;
            rec["n"] = n;
            rec["r"] = r;
            rec["a"] = a;
            rec["c"] = c;
            rec["alpha"] = num(alpha);
            rec["eigenvalue_r"] = num(sp.r_eig);
            rec["B"] = num(sp.B);
            rec["C"] = num(sp.C);
            rec["d"] = num(sp.d);
            rec["theta1"] = num(sp.theta1);
            rec["m1"] = sp.m1;
            rec["theta2"] = num(sp.theta2);
            rec["m2"] = sp.m2;
            if (fixture) {
                ordered_json chk;
                chk["family"] = family;
                chk["max_deviation"] = num(max_dev);
                rec["check"] = chk;
            }
            records.push_back(rec);
        } else {
            csv << n << ',' << r << ',' << a << ',' << c << ',' << fmt12(alpha) << ','
                << fmt12(sp.r_eig) << ',' << fmt12(sp.B) << ',' << fmt12(sp.C) << ','
                << fmt12(sp.d) << ',' << fmt12(sp.theta1) << ',' << sp.m1 << ','
                << fmt12(sp.theta2) << ',' << sp.m2 << ','
                << (fixture ? fmt12(max_dev) : std::string{}) << "\n";
        }
    }
    if (format == "json") {
        ordered_json doc;
        doc["command"] = "srg";
        doc["records"] = records;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_verify(int n_max, std::vector<double> grid, bool connected_only, int jobs,
               const std::vector<std::string>& theorems, const std::string& format) {
    aspectra::SweepConfig cfg;
    cfg.n_max = n_max;
    if (!grid.empty()) cfg.alpha_grid = std::move(grid);
    cfg.connected_only = connected_only;
    cfg.jobs = jobs;
    cfg.theorem_ids = theorems;
    aspectra::VerificationReport report;
    try {
        report = aspectra::run_suite(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (format == "json")
        std::cout << aspectra::to_json(report);
    else
        std::cout << aspectra::violations_csv(report);
    std::cerr << "theorem                        tested  applicable  violations  witnesses\n";
    for (const auto& r : report.results) {
        std::fprintf(stderr, "%-30s %7lld %11lld %11zu %10zu\n", r.id.c_str(),
                     static_cast<long long>(r.graphs_tested),
                     static_cast<long long>(r.applicable_count), r.violations.size(),
                     r.equality_witnesses.size());
    }
    std::cerr << (report.passed ? "suite passed\n" : "suite FAILED\n");
    return report.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized adjacency spectra, energies, and bound verification"};
    app.require_subcommand(1);

    std::string gen, in_file, format = "json";
    std::vector<double> alphas;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--gen", gen,
                        "Generator spec (complete:n, bipartite:a:b, cycle:n, path:n, "
                        "matching:k, petersen)");
        cmd->add_option("--in", in_file, "graph6 file, one record per line");
        cmd->add_option("--alpha", alphas, "Comma-separated alpha values")
            ->delimiter(',')
            ->required();
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues, deviations, energy");
    add_io(spectrum_cmd);
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "Evaluate every energy bound");
    add_io(bounds_cmd);

    CLI::App* srg_cmd = app.add_subcommand("srg", "Closed-form strongly regular spectrum");
    int srg_n = 0, srg_r = 0, srg_a = 0, srg_c = 0;
    bool srg_check = false;
    srg_cmd->add_option("n", srg_n, "order")->required();
    srg_cmd->add_option("r", srg_r, "degree")->required();
    srg_cmd->add_option("a", srg_a, "common neighbours of adjacent pairs")->required();
    srg_cmd->add_option("c", srg_c, "common neighbours of non-adjacent pairs")->required();
    srg_cmd->add_option("--alpha", alphas, "Comma-separated alpha values")
        ->delimiter(',')
        ->required();
    srg_cmd->add_flag("--check", srg_check, "Cross-validate against the numeric spectrum");
    srg_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "Exhaustive small-graph theorem sweep");
    int n_max = 6, jobs = 1;
    bool connected_only = false;
    std::vector<double> grid;
    std::vector<std::string> theorems;
    verify_cmd->add_option("--n-max", n_max, "Maximum order (2..7)");
    verify_cmd->add_option("--alpha-grid", grid, "Comma-separated alpha grid (default 0,0.1,...,0.9)")
        ->delimiter(',');
    verify_cmd->add_flag("--connected-only", connected_only, "Restrict to connected graphs");
    verify_cmd->add_option("--jobs", jobs, "Worker threads");
    verify_cmd->add_option("--theorems", theorems, "Comma-separated subset of checks")
        ->delimiter(',');
    verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (spectrum_cmd->parsed()) return cmd_spectrum(gen, in_file, alphas, format);
        if (bounds_cmd->parsed()) return cmd_bounds(gen, in_file, alphas, format);
        if (srg_cmd->parsed()) return cmd_srg(srg_n, srg_r, srg_a, srg_c, alphas, srg_check, format);
        if (verify_cmd->parsed())
            return cmd_verify(n_max, grid, connected_only, jobs, theorems, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const aspectra::SrgInfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const aspectra::SrgDegenerateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const aspectra::SrgMultiplicityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
