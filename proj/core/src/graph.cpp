#include <aspectra/graph.hpp>

#include <algorithm>
#include <array>
#include <numeric>

namespace aspectra {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0)
        throw std::invalid_argument("Graph: vertex count must be positive");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("Graph: self-loops are not allowed");
        adj_[static_cast<std::size_t>(u) * n + v] = 1;
        adj_[static_cast<std::size_t>(v) * n + u] = 1;
    }
    degrees_.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int w = 0; w < n; ++w) d += adj_[static_cast<std::size_t>(v) * n + w];
        degrees_[v] = d;
    }
    const long long deg_sum = std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
    m_ = static_cast<int>(deg_sum / 2);
    delta_ = *std::min_element(degrees_.begin(), degrees_.end());
    Delta_ = *std::max_element(degrees_.begin(), degrees_.end());
    zagreb_ = 0;
    for (int d : degrees_) zagreb_ += static_cast<long long>(d) * d;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: order must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: part sizes must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: order must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: order must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph matching_union(int k) {
    if (k < 1) throw std::invalid_argument("matching_union: copy count must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return Graph(2 * k, edges);
}

Graph petersen_graph() {
    // Vertices are the 2-subsets of {0..4}; edges join disjoint subsets.
    std::array<std::pair<int, int>, 10> subsets{};
    int idx = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) subsets[idx++] = {i, j};
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            const auto& [a, b] = subsets[u];
            const auto& [c, d] = subsets[v];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(u, v);
        }
    return Graph(10, edges);
}

Graph empty_graph(int n) {
    return Graph(n, {});
}

Graph generate(const GraphFamily& family) {
    switch (family.kind) {
        case GraphFamily::Kind::Complete: return complete_graph(family.a);
        case GraphFamily::Kind::CompleteBipartite: return complete_bipartite(family.a, family.b);
        case GraphFamily::Kind::Cycle: return cycle_graph(family.a);
        case GraphFamily::Kind::Path: return path_graph(family.a);
        case GraphFamily::Kind::MatchingUnion: return matching_union(family.a);
        case GraphFamily::Kind::Petersen: return petersen_graph();
        case GraphFamily::Kind::Empty: return empty_graph(family.a);
    }
    throw std::invalid_argument("generate: unknown family kind");
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < n1; ++j)
        for (int i = 0; i < j; ++i)
            if (g1.adjacent(i, j)) edges.emplace_back(i, j);
    for (int j = 0; j < g2.order(); ++j)
        for (int i = 0; i < j; ++i)
            if (g2.adjacent(i, j)) edges.emplace_back(n1 + i, n1 + j);
    return Graph(n1 + g2.order(), edges);
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w = 0; w < n; ++w)
            if (g.adjacent(v, w) && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return static_cast<int>(queue.size()) == n;
}

bool is_complete(const Graph& g) {
    const int n = g.order();
    return g.size() == n * (n - 1) / 2;
}

bool is_perfect_matching(const Graph& g) {
    return g.min_degree() == 1 && g.max_degree() == 1;
}

bool is_balanced_complete_bipartite(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) return false;
    if (!g.is_regular() || g.min_degree() != n / 2) return false;
    // Part containing vertex 0 = non-neighbours of 0; it must be independent.
    std::vector<int> part;
    for (int v = 0; v < n; ++v)
        if (v == 0 || !g.adjacent(0, v)) part.push_back(v);
    if (static_cast<int>(part.size()) != n / 2) return false;
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j)
            if (g.adjacent(part[i], part[j])) return false;
    return true;
}

Graph from_edge_bitmask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (mask >> k & 1) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::uint64_t edge_bitmask(const Graph& g) {
    std::uint64_t mask = 0;
    int k = 0;
    for (int j = 0; j < g.order(); ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
    return mask;
}

}  // namespace aspectra
