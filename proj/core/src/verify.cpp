#include <aspectra/verify.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

#include <aspectra/graph6.hpp>

namespace aspectra {

namespace {

constexpr double kTol = 1e-8;

const std::vector<std::string> kRegistry = {
    "graph6_roundtrip",
    "alpha_one_diagonal",
    "energy_merging",
    "zagreb_bounds",
    "moment_identities",
    "radius_sandwich",
    "radius_mean_lb",
    "radius_simple",
    "two_distinct",
    "three_value_regular",
    "psd_half",
    "ordered_sum",
    "trace_radius",
    "bound_lower_strict",
    "bound_lower_two_level",
    "bound_lower_sn_large",
    "bound_lower_sn_small",
    "bound_lower_sn_zero",
    "bound_lower_sn_zero_degree",
    "bound_lower_regular",
    "bound_upper_main",
    "bound_upper_zagreb",
    "bound_upper_regular",
};

int registry_index(const std::string& id) {
    for (std::size_t i = 0; i < kRegistry.size(); ++i)
        if (kRegistry[i] == id) return static_cast<int>(i);
    return -1;
}

struct Accumulator {
    std::vector<TheoremResult> results;
    std::vector<bool> enabled;

    explicit Accumulator(const std::vector<bool>& on) : enabled(on) {
        results.resize(kRegistry.size());
        for (std::size_t i = 0; i < kRegistry.size(); ++i) results[i].id = kRegistry[i];
    }

    TheoremResult* begin_check(const std::string& id) {
        const int idx = registry_index(id);
        if (idx < 0 || !enabled[idx]) return nullptr;
        ++results[idx].graphs_tested;
        return &results[idx];
    }
};

void violate(TheoremResult& r, const std::string& g6, double alpha, std::string detail,
             std::vector<std::pair<std::string, double>> measured = {}) {
    r.violations.push_back({g6, alpha, std::move(detail), std::move(measured)});
}

void witness(TheoremResult& r, const std::string& g6, double alpha, std::string cls) {
    r.equality_witnesses.push_back({g6, alpha, std::move(cls)});
}

// --- per-graph checks -------------------------------------------------------

void check_graph6_roundtrip(Accumulator& acc, const Graph& g, const std::string& g6) {
    TheoremResult* r = acc.begin_check("graph6_roundtrip");
    if (!r) return;
    ++r->applicable_count;
    try {
        if (!(parse_graph6(g6) == g)) violate(*r, g6, -1.0, "round-trip altered the graph");
    } catch (const Graph6Error& e) {
        violate(*r, g6, -1.0, std::string("round-trip parse failed: ") + e.what());
    }
}

void check_alpha_one(Accumulator& acc, const Graph& g, const std::string& g6) {
    TheoremResult* r = acc.begin_check("alpha_one_diagonal");
    if (!r) return;
    ++r->applicable_count;
    const int n = g.order();
    const SymMatrix B = build_alpha_matrix(g, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double want = i == j ? static_cast<double>(g.degree(i)) : 0.0;
            if (B(i, j) != want) {
                violate(*r, g6, 1.0, "matrix at alpha 1 is not the degree diagonal");
                return;
            }
        }
    std::vector<double> degs(g.degrees().begin(), g.degrees().end());
    std::sort(degs.begin(), degs.end(), std::greater<>());
    const Spectrum sp = spectrum(g, 1.0);
    for (int i = 0; i < n; ++i)
        if (std::abs(sp.p[i] - degs[i]) > kTol) {
            violate(*r, g6, 1.0, "spectrum at alpha 1 differs from the degree sequence",
                    {{"eigenvalue", sp.p[i]}, {"degree", degs[i]}});
            return;
        }
}

void check_energy_merging(Accumulator& acc, const Graph& g, const std::string& g6) {
    TheoremResult* r = acc.begin_check("energy_merging");
    if (!r) return;
    ++r->applicable_count;
    const int n = g.order();
    // Adjacency route, built without build_alpha_matrix.
    SymMatrix A(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) A.set(i, j, 1.0);
    double adjacency_energy = 0.0;
    for (double lambda : eigen_symmetric(A).values) adjacency_energy += std::abs(lambda);
    const double e0 = spectrum(g, 0.0).energy;
    if (std::abs(e0 - adjacency_energy) > kTol)
        violate(*r, g6, 0.0, "energy at alpha 0 differs from adjacency energy",
                {{"energy", e0}, {"adjacency_energy", adjacency_energy}});

    const double mean = 2.0 * g.size() / static_cast<double>(n);
    double q_energy = 0.0;
    for (double q : eigen_symmetric(build_signless_laplacian(g)).values)
        q_energy += std::abs(q - mean);
    const double eh = spectrum(g, 0.5).energy;
    if (std::abs(eh - q_energy / 2.0) > kTol)
        violate(*r, g6, 0.5, "energy at alpha 1/2 differs from half the signless Laplacian energy",
                {{"energy", eh}, {"half_q_energy", q_energy / 2.0}});
}

void check_zagreb(Accumulator& acc, const Graph& g, const std::string& g6) {
    TheoremResult* r = acc.begin_check("zagreb_bounds");
    if (!r) return;
    if (g.order() < 2 || !is_connected(g)) return;
    ++r->applicable_count;
    const double m1 = static_cast<double>(g.zagreb_m1());
    const ZagrebBounds zb = zagreb_bounds(g);
    if (m1 < zb.lower - kTol || m1 > std::min(zb.upper_size, zb.upper_spread) + kTol) {
        violate(*r, g6, -1.0, "Zagreb index escapes its bounds",
                {{"m1", m1}, {"lower", zb.lower}, {"upper_size", zb.upper_size},
                 {"upper_spread", zb.upper_spread}});
        return;
    }
    const bool eq_lower = std::abs(m1 - zb.lower) <= kTol;
    const bool eq_spread = std::abs(m1 - zb.upper_spread) <= kTol;
    // The sandwich collapses (both spread bounds tight) exactly on regular
    // graphs; individually each bound admits non-regular ties.
    if ((eq_lower && eq_spread) != g.is_regular())
        violate(*r, g6, -1.0, "simultaneous Zagreb equality does not match regularity",
                {{"m1", m1}, {"lower", zb.lower}, {"upper_spread", zb.upper_spread}});
}

// --- per-(graph, alpha) checks ----------------------------------------------

struct PairContext {
    const Graph& g;
    const std::string& g6;
    double alpha;
    const Spectrum& sp;
    const BoundReport& rep;
    bool connected;
};

void check_moments(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("moment_identities");
    if (!r) return;
    ++r->applicable_count;
    const Graph& g = ctx.g;
    const double m = g.size(), n = g.order(), alpha = ctx.alpha;
    double sum_p = 0.0, sum_p2 = 0.0, sum_eta2 = 0.0;
    for (double p : ctx.sp.p) {
        sum_p += p;
        sum_p2 += p * p;
    }
    for (double e : ctx.sp.eta) sum_eta2 += e * e;
    const double m1 = static_cast<double>(g.zagreb_m1());
    const double want2 = alpha * alpha * m1 + (1 - alpha) * (1 - alpha) * 2 * m;
    const double want3 = want2 - 4 * alpha * alpha * m * m / n;
    if (std::abs(sum_p - 2 * alpha * m) > kTol || std::abs(sum_p2 - want2) > kTol ||
        std::abs(sum_eta2 - want3) > kTol)
        violate(*r, ctx.g6, alpha, "moment identity violated",
                {{"sum_p", sum_p}, {"sum_p2", sum_p2}, {"sum_eta2", sum_eta2}});
}

void check_radius_sandwich(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("radius_sandwich");
    if (!r) return;
    ++r->applicable_count;
    const double p1 = ctx.sp.p.front();
    const double lo = ctx.g.min_degree(), hi = ctx.g.max_degree();
    if (p1 < lo - kTol || p1 > hi + kTol) {
        violate(*r, ctx.g6, ctx.alpha, "spectral radius escapes the degree interval",
                {{"p1", p1}, {"delta", lo}, {"Delta", hi}});
        return;
    }
    if (ctx.connected && !ctx.g.is_regular() &&
        (std::abs(p1 - hi) <= kTol || std::abs(p1 - lo) <= kTol))
        violate(*r, ctx.g6, ctx.alpha, "degree-interval equality on a non-regular graph",
                {{"p1", p1}, {"delta", lo}, {"Delta", hi}});
}

void check_radius_mean(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("radius_mean_lb");
    if (!r) return;
    ++r->applicable_count;
    const double p1 = ctx.sp.p.front();
    const double mean = 2.0 * ctx.g.size() / ctx.g.order();
    if (p1 < mean - kTol)
        violate(*r, ctx.g6, ctx.alpha, "spectral radius below mean degree",
                {{"p1", p1}, {"mean_degree", mean}});
    else if ((std::abs(p1 - mean) <= kTol) != ctx.g.is_regular())
        violate(*r, ctx.g6, ctx.alpha, "mean-degree equality does not match regularity",
                {{"p1", p1}, {"mean_degree", mean}});
}

void check_radius_simple(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("radius_simple");
    if (!r) return;
    if (!ctx.connected || ctx.g.order() < 2) return;
    ++r->applicable_count;
    const auto clusters = distinct_eigenvalues(ctx.sp);
    if (clusters.front().second != 1)
        violate(*r, ctx.g6, ctx.alpha, "largest eigenvalue is not simple",
                {{"multiplicity", static_cast<double>(clusters.front().second)}});
}

void check_two_distinct(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("two_distinct");
    if (!r) return;
    if (!ctx.connected || ctx.g.order() < 2) return;
    ++r->applicable_count;
    const bool two = distinct_eigenvalues(ctx.sp).size() == 2;
    if (two != is_complete(ctx.g))
        violate(*r, ctx.g6, ctx.alpha,
                two ? "two eigenvalue clusters on a non-complete graph"
                    : "complete graph without exactly two clusters");
    if (two) witness(*r, ctx.g6, ctx.alpha, "two_clusters");
}

void check_three_value_regular(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("three_value_regular");
    if (!r) return;
    if (!ctx.connected || !ctx.g.is_regular() || ctx.g.size() < 1) return;
    ++r->applicable_count;
    const int n = ctx.g.order();
    const double rdeg = ctx.g.max_degree(), alpha = ctx.alpha;
    const double hi = rdeg * alpha + (1.0 - alpha);
    const double lo = rdeg * alpha - (1.0 - alpha);
    bool matched = false;
    std::vector<double> cand(n);
    for (int a = 0; a < n && !matched; ++a) {
        cand.clear();
        cand.push_back(rdeg);
        for (int i = 0; i < a; ++i) cand.push_back(hi);
        for (int i = 0; i < n - 1 - a; ++i) cand.push_back(lo);
        std::sort(cand.begin(), cand.end(), std::greater<>());
        matched = true;
        for (int i = 0; i < n; ++i)
            if (std::abs(cand[i] - ctx.sp.p[i]) > kTol) {
                matched = false;
                break;
            }
    }
    if (matched && !is_complete(ctx.g))
        violate(*r, ctx.g6, ctx.alpha, "three-value regular pattern on a non-complete graph");
    if (matched) witness(*r, ctx.g6, ctx.alpha, "complete_graph");
}

void check_psd_half(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("psd_half");
    if (!r) return;
    if (ctx.alpha < 0.5) return;
    ++r->applicable_count;
    if (ctx.sp.p.back() < -kTol)
        violate(*r, ctx.g6, ctx.alpha, "negative eigenvalue at alpha >= 1/2",
                {{"p_n", ctx.sp.p.back()}});
}

void check_ordered_sum(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("ordered_sum");
    if (!r) return;
    ++r->applicable_count;
    if (!ordered_sum_inequality(ctx.sp.s))
        violate(*r, ctx.g6, ctx.alpha, "ordered-sum inequality fails on the deviation sequence");
}

void check_trace_radius(Accumulator& acc, const PairContext& ctx) {
    TheoremResult* r = acc.begin_check("trace_radius");
    if (!r) return;
    const BoundValue* b = ctx.rep.find("trace_radius");
    if (!b || !b->applicable) return;
    ++r->applicable_count;
    if (!b->satisfied)
        violate(*r, ctx.g6, ctx.alpha, "trace bound fails",
                {{"p1", b->measured}, {"bound", b->value}, {"slack", b->slack}});
}

struct BoundCheckSpec {
    const char* theorem;
    const char* bound;
    bool strict;  ///< no equality permitted at all
};

void check_bound(Accumulator& acc, const PairContext& ctx, const BoundCheckSpec& spec) {
    TheoremResult* r = acc.begin_check(spec.theorem);
    if (!r) return;
    const BoundValue* b = ctx.rep.find(spec.bound);
    if (!b || !b->applicable) return;
    ++r->applicable_count;
    std::vector<std::pair<std::string, double>> measured{
        {"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}};
    if (!b->satisfied) {
        violate(*r, ctx.g6, ctx.alpha, "bound violated", measured);
        return;
    }
    const bool tie = std::abs(b->slack) <= kTol;
    if (spec.strict) {
        if (tie) violate(*r, ctx.g6, ctx.alpha, "strict bound attained", measured);
        return;
    }
    if (tie && !b->equality) {
        violate(*r, ctx.g6, ctx.alpha, "equality without the extremal shape", measured);
        return;
    }
    if (b->equality) witness(*r, ctx.g6, ctx.alpha, std::string(to_string(ctx.rep.shape.classification)));
}

void check_bound_suite(Accumulator& acc, const PairContext& ctx) {
    check_bound(acc, ctx, {"bound_lower_strict", "lower_strict", false});
    check_bound(acc, ctx, {"bound_lower_two_level", "lower_two_level", false});
    check_bound(acc, ctx, {"bound_lower_sn_small", "lower_sn_small", true});
    check_bound(acc, ctx, {"bound_lower_sn_zero", "lower_sn_zero", false});

    // Checks with a pinned extremal family: the confirmation predicate and
    // the numeric tie must agree in both directions.
    {
        TheoremResult* r = acc.begin_check("bound_lower_sn_large");
        if (r) {
            const BoundValue* b = ctx.rep.find("lower_sn_large");
            if (b && b->applicable) {
                ++r->applicable_count;
                const bool is_k3 = ctx.g.order() == 3 && is_complete(ctx.g);
                const bool tie = std::abs(b->slack) <= kTol;
                if (!b->satisfied)
                    violate(*r, ctx.g6, ctx.alpha, "bound violated",
                            {{"energy", b->measured}, {"bound", b->value}});
                else if (tie != is_k3)
                    violate(*r, ctx.g6, ctx.alpha,
                            tie ? "equality on a graph other than the triangle"
                                : "triangle misses equality",
                            {{"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}});
                if (b->equality) witness(*r, ctx.g6, ctx.alpha, "complete_graph");
            }
        }
    }
    {
        TheoremResult* r = acc.begin_check("bound_lower_sn_zero_degree");
        if (r) {
            const BoundValue* b = ctx.rep.find("lower_sn_zero_degree");
            if (b && b->applicable) {
                ++r->applicable_count;
                const bool tie = std::abs(b->slack) <= kTol;
                if (!b->satisfied)
                    violate(*r, ctx.g6, ctx.alpha, "bound violated",
                            {{"energy", b->measured}, {"bound", b->value}});
                else if (ctx.g.is_regular()) {
                    if (tie != is_balanced_complete_bipartite(ctx.g))
                        violate(*r, ctx.g6, ctx.alpha,
                                "regular-branch equality does not match balanced bipartite",
                                {{"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}});
                } else if (tie) {
                    violate(*r, ctx.g6, ctx.alpha, "strict non-regular branch attained",
                            {{"energy", b->measured}, {"bound", b->value}});
                }
                if (b->equality) witness(*r, ctx.g6, ctx.alpha, "balanced_bipartite");
            }
        }
    }
    {
        TheoremResult* r = acc.begin_check("bound_lower_regular");
        if (r) {
            const BoundValue* b = ctx.rep.find("lower_regular");
            if (b && b->applicable) {
                ++r->applicable_count;
                const bool sn_zero = ctx.sp.s.back() <= kTol;
                const bool tie = std::abs(b->slack) <= kTol;
                if (!b->satisfied)
                    violate(*r, ctx.g6, ctx.alpha, "bound violated",
                            {{"energy", b->measured}, {"bound", b->value}});
                else if (sn_zero && tie != is_balanced_complete_bipartite(ctx.g))
                    violate(*r, ctx.g6, ctx.alpha,
                            "zero-deviation branch equality does not match balanced bipartite",
                            {{"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}});
                else if (!sn_zero && tie && !b->equality)
                    violate(*r, ctx.g6, ctx.alpha, "equality without the extremal shape",
                            {{"energy", b->measured}, {"bound", b->value}});
                if (b->equality)
                    witness(*r, ctx.g6, ctx.alpha,
                            sn_zero ? "balanced_bipartite"
                                    : std::string(to_string(ctx.rep.shape.classification)));
            }
        }
    }
    {
        TheoremResult* r = acc.begin_check("bound_upper_main");
        if (r) {
            const BoundValue* b = ctx.rep.find("upper_main");
            if (b && b->applicable) {
                ++r->applicable_count;
                const bool tie = std::abs(b->slack) <= kTol;
                if (!b->satisfied)
                    violate(*r, ctx.g6, ctx.alpha, "bound violated",
                            {{"energy", b->measured}, {"bound", b->value}});
                else if (ctx.g.size() >= 1 && tie != (is_perfect_matching(ctx.g)))
                    violate(*r, ctx.g6, ctx.alpha,
                            tie ? "equality beyond single-edge unions"
                                : "single-edge union misses equality",
                            {{"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}});
                if (b->equality) witness(*r, ctx.g6, ctx.alpha, "matching_union");
            }
        }
    }
    {
        TheoremResult* r = acc.begin_check("bound_upper_zagreb");
        if (r) {
            const BoundValue* b = ctx.rep.find("upper_zagreb");
            if (b && b->applicable) {
                ++r->applicable_count;
                const bool is_k2 = ctx.g.order() == 2 && ctx.g.size() == 1;
                const bool tie = std::abs(b->slack) <= kTol;
                if (!b->satisfied)
                    violate(*r, ctx.g6, ctx.alpha, "bound violated",
                            {{"energy", b->measured}, {"bound", b->value}});
                else if (tie != is_k2)
                    violate(*r, ctx.g6, ctx.alpha,
                            tie ? "equality on a graph other than a single edge"
                                : "single edge misses equality",
                            {{"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}});
                if (b->equality) witness(*r, ctx.g6, ctx.alpha, "matching_union");
            }
        }
    }
    {
        TheoremResult* r = acc.begin_check("bound_upper_regular");
        if (r) {
            const BoundValue* b = ctx.rep.find("upper_regular");
            if (b && b->applicable) {
                ++r->applicable_count;
                const bool tie = std::abs(b->slack) <= kTol;
                if (!b->satisfied)
                    violate(*r, ctx.g6, ctx.alpha, "bound violated",
                            {{"energy", b->measured}, {"bound", b->value}});
                else if (ctx.g.size() >= 1 && tie != is_perfect_matching(ctx.g))
                    violate(*r, ctx.g6, ctx.alpha,
                            "regular upper-bound equality does not match single-edge unions",
                            {{"energy", b->measured}, {"bound", b->value}, {"slack", b->slack}});
                if (b->equality) witness(*r, ctx.g6, ctx.alpha, "matching_union");
            }
        }
    }
}

void run_pair_checks(Accumulator& acc, const PairContext& ctx) {
    check_moments(acc, ctx);
    check_radius_sandwich(acc, ctx);
    check_radius_mean(acc, ctx);
    check_radius_simple(acc, ctx);
    check_two_distinct(acc, ctx);
    check_three_value_regular(acc, ctx);
    check_psd_half(acc, ctx);
    check_ordered_sum(acc, ctx);
    check_trace_radius(acc, ctx);
    check_bound_suite(acc, ctx);
}

void process_graph(Accumulator& acc, const Graph& g, const std::vector<double>& grid) {
    const std::string g6 = write_graph6(g);
    check_graph6_roundtrip(acc, g, g6);
    check_alpha_one(acc, g, g6);
    check_energy_merging(acc, g, g6);
    check_zagreb(acc, g, g6);
    const bool connected = is_connected(g);
    for (double alpha : grid) {
        Spectrum sp;
        try {
            sp = spectrum(g, alpha);
        } catch (const InvariantError& e) {
            TheoremResult* r = acc.begin_check("moment_identities");
            if (r) violate(*r, g6, alpha, e.what());
            continue;
        } catch (const SolverError& e) {
            throw SolverError(std::string(e.what()) + " [graph " + g6 + "]");
        }
        const BoundReport rep = full_report(g, sp);
        run_pair_checks(acc, {g, g6, alpha, sp, rep, connected});
    }
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.n_max < 2 || cfg.n_max > 7)
        throw std::invalid_argument("run_suite: n_max must lie in 2..7");
    if (cfg.alpha_grid.empty())
        throw std::invalid_argument("run_suite: empty alpha grid");
    for (double a : cfg.alpha_grid)
        if (!(a >= 0.0 && a < 1.0))
            throw std::invalid_argument("run_suite: grid alpha must lie in [0,1)");
    if (cfg.jobs < 1) throw std::invalid_argument("run_suite: jobs must be positive");
    for (const auto& id : cfg.theorem_ids)
        if (registry_index(id) < 0)
            throw std::invalid_argument("run_suite: unknown theorem id '" + id + "'");
}

}  // namespace

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 9; ++k) grid.push_back(k / 10.0);
    return grid;
}

const std::vector<std::string>& registered_theorems() { return kRegistry; }

void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&, std::uint64_t)>& fn) {
    if (n < 2 || n > 7)
        throw std::invalid_argument("enumerate_graphs: order must lie in 2..7");
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = from_edge_bitmask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        fn(g, mask);
    }
}

long long count_graphs(int n, bool connected_only) {
    long long count = 0;
    enumerate_graphs(n, connected_only, [&](const Graph&, std::uint64_t) { ++count; });
    return count;
}

VerificationReport run_suite(const SweepConfig& cfg) {
    validate_config(cfg);
    std::vector<bool> enabled(kRegistry.size(), cfg.theorem_ids.empty());
    for (const auto& id : cfg.theorem_ids) enabled[registry_index(id)] = true;

    VerificationReport report;
    report.n_max = cfg.n_max;
    report.alpha_grid = cfg.alpha_grid;
    report.connected_only = cfg.connected_only;
    report.results.resize(kRegistry.size());
    for (std::size_t i = 0; i < kRegistry.size(); ++i) report.results[i].id = kRegistry[i];

    for (int n = 2; n <= cfg.n_max; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        const int jobs = static_cast<int>(std::min<std::uint64_t>(cfg.jobs, total));
        const std::uint64_t chunk = (total + jobs - 1) / jobs;

        std::vector<Accumulator> partial(jobs, Accumulator(enabled));
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(jobs);
        for (int w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w] {
                try {
                    const std::uint64_t lo = w * chunk;
                    const std::uint64_t hi = std::min(total, lo + chunk);
                    for (std::uint64_t mask = lo; mask < hi; ++mask) {
                        Graph g = from_edge_bitmask(n, mask);
                        if (cfg.connected_only && !is_connected(g)) continue;
                        process_graph(partial[w], g, cfg.alpha_grid);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        // Merge in worker order: each worker visited an ascending mask range,
        // so the concatenation is the sequential enumeration order.
        for (const auto& acc : partial)
            for (std::size_t i = 0; i < kRegistry.size(); ++i) {
                auto& dst = report.results[i];
                const auto& src = acc.results[i];
                dst.graphs_tested += src.graphs_tested;
                dst.applicable_count += src.applicable_count;
                dst.violations.insert(dst.violations.end(), src.violations.begin(),
                                      src.violations.end());
                dst.equality_witnesses.insert(dst.equality_witnesses.end(),
                                              src.equality_witnesses.begin(),
                                              src.equality_witnesses.end());
            }
    }

    std::erase_if(report.results, [&](const TheoremResult& r) {
        return !enabled[registry_index(r.id)];
    });
    for (const auto& r : report.results)
        if (!r.violations.empty()) report.passed = false;
    return report;
}

std::vector<EqualityWitness> find_equality_witnesses(const std::string& theorem_id,
                                                     const SweepConfig& cfg) {
    if (registry_index(theorem_id) < 0)
        throw std::invalid_argument("find_equality_witnesses: unknown theorem id '" + theorem_id + "'");
    SweepConfig one = cfg;
    one.theorem_ids = {theorem_id};
    const VerificationReport report = run_suite(one);
    const TheoremResult* r = report.find(theorem_id);
    return r ? r->equality_witnesses : std::vector<EqualityWitness>{};
}

const TheoremResult* VerificationReport::find(std::string_view id) const {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

}  // namespace aspectra
