#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <aspectra/bounds.hpp>
#include <aspectra/graph.hpp>

namespace aspectra {

/// {0.0, 0.1, ..., 0.9}; theorem hypotheses require alpha below 1.
std::vector<double> default_alpha_grid();

struct SweepConfig {
    int n_max = 6;  ///< hard cap 7
    std::vector<double> alpha_grid = default_alpha_grid();
    bool connected_only = false;
    /// Subset of registered_theorems() to run; empty means all.
    std::vector<std::string> theorem_ids;
    int jobs = 1;
};

struct Violation {
    std::string graph6;
    double alpha;  ///< negative for per-graph (alpha-free) checks
    std::string detail;
    std::vector<std::pair<std::string, double>> measured;
};

struct EqualityWitness {
    std::string graph6;
    double alpha;
    std::string classification;
};

struct TheoremResult {
    std::string id;
    long long graphs_tested = 0;
    long long applicable_count = 0;
    std::vector<Violation> violations;
    std::vector<EqualityWitness> equality_witnesses;
};

struct VerificationReport {
    int n_max = 0;
    std::vector<double> alpha_grid;
    bool connected_only = false;
    std::vector<TheoremResult> results;
    bool passed = true;

    const TheoremResult* find(std::string_view id) const;
};

/// Stable list of check identifiers, in report order.
const std::vector<std::string>& registered_theorems();

/// Calls fn for every labeled simple graph on n vertices exactly once, in
/// ascending edge-bitmask order (bit order as in from_edge_bitmask).
/// Requires 2 <= n <= 7.
void enumerate_graphs(int n, bool connected_only,
                      const std::function<void(const Graph&, std::uint64_t)>& fn);
long long count_graphs(int n, bool connected_only);

/// Runs every selected check over all labeled graphs with 2 <= order <=
/// n_max and every grid alpha. Deterministic: identical configs produce
/// byte-identical serialized reports regardless of the worker count.
VerificationReport run_suite(const SweepConfig& cfg);

std::vector<EqualityWitness> find_equality_witnesses(const std::string& theorem_id,
                                                     const SweepConfig& cfg);

/// Rounds to 12 significant digits (the precision every report prints).
double round_sig12(double v);

std::string to_json(const VerificationReport& report);
std::string violations_csv(const VerificationReport& report);
std::string to_json(const BoundReport& report);

}  // namespace aspectra
