#include "tdc/graph.hpp"

#include <algorithm>

#include "tdc/errors.hpp"

namespace tdc {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw ParameterError("graph order must be >= 1, got " + std::to_string(n));
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("edge endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
        matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    std::uint64_t m = 0;
    for (int u : adj_[v]) m |= std::uint64_t{1} << u;
    return m;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph disjoint_union(const std::vector<Graph>& gs) {
    if (gs.empty()) throw ParameterError("disjoint_union of an empty list");
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges()) edges.emplace_back(u + n, v + n);
        n += g.order();
    }
    return Graph(n, std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, ng + v);
    return Graph(ng + h.order(), std::move(edges));
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u : g.neighbors(v)) {
                if (comp[u] < 0) {
                    comp[u] = comp[s];
                    stack.push_back(u);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    // BFS starts scan vertices in order, so components already sorted by smallest member.
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

}  // namespace tdc
