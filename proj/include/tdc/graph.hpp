#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tdc {

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// cheap to copy and safe to share across threads.
class Graph {
  public:
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    // Edges as (i, j) with i < j, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Neighborhood bitmask; only valid for order() <= 64.
    std::uint64_t neighbor_mask(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
};

Graph complement(const Graph& g);

// Vertices relabeled by component offset, component order preserved.
Graph disjoint_union(const std::vector<Graph>& gs);

// g's vertices keep their indices, h's are offset by g.order().
Graph join(const Graph& g, const Graph& h);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace tdc
