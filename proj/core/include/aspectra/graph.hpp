#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aspectra {

/// Undirected simple graph with cached degree statistics.
///
/// The adjacency relation is stored as a dense symmetric bit matrix with an
/// empty diagonal. All derived quantities (edge count, degree sequence,
/// extremal degrees, first Zagreb index) are computed once at construction in
/// integer arithmetic. Instances are immutable and safe to share between
/// threads.
class Graph {
public:
    /// Builds a graph on n vertices from an edge list. Duplicate pairs
    /// collapse; self-loops and out-of-range endpoints are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    int min_degree() const { return delta_; }
    int max_degree() const { return Delta_; }
    bool is_regular() const { return delta_ == Delta_; }

    /// First Zagreb index, the sum of squared vertex degrees.
    long long zagreb_m1() const { return zagreb_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_;
    int m_;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degrees_;
    int delta_;
    int Delta_;
    long long zagreb_;
};

/// Named graph family for the generators exposed by the CLI. Parameters `a`
/// and `b` are interpreted per kind (order, part sizes, or copy count).
struct GraphFamily {
    enum class Kind { Complete, CompleteBipartite, Cycle, Path, MatchingUnion, Petersen, Empty };
    Kind kind;
    int a = 0;
    int b = 0;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph generate(const GraphFamily& family);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// k disjoint copies of a single edge (a perfect matching on 2k vertices).
Graph matching_union(int k);
/// The Kneser graph on the 2-subsets of a 5-set: 3-regular, order 10, girth 5.
Graph petersen_graph();
Graph empty_graph(int n);

Graph disjoint_union(const Graph& g1, const Graph& g2);

/// True iff a breadth-first traversal from vertex 0 reaches all vertices.
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);
/// Every vertex has degree exactly 1, i.e. the graph is kK2.
bool is_perfect_matching(const Graph& g);
/// Complete bipartite with both parts of size n/2.
bool is_balanced_complete_bipartite(const Graph& g);

/// Builds a graph on n vertices from an edge bitmask. Bit k corresponds to
/// the k-th pair in column-major upper-triangle order
/// (0,1),(0,2),(1,2),(0,3),... — the same ordering the graph6 payload uses.
Graph from_edge_bitmask(int n, std::uint64_t mask);
std::uint64_t edge_bitmask(const Graph& g);

}  // namespace aspectra
