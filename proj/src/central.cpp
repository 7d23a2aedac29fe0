#include "tdc/central.hpp"

#include <algorithm>
#include <utility>

#include "tdc/errors.hpp"

namespace tdc {

int CentralGraph::subdivision_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto& es = base.edges();
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(i, j));
    if (it == es.end() || *it != std::make_pair(i, j))
        throw ParameterError("no base edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return base.order() + static_cast<int>(it - es.begin());
}

CentralGraph::Role CentralGraph::role(int v) const {
    const int n = base.order();
    if (v < n) return {false, v, v};
    auto [i, j] = base.edges()[v - n];
    return {true, i, j};
}

std::string CentralGraph::role_label(int v) const {
    Role r = role(v);
    if (!r.is_subdivision) return "original:" + std::to_string(r.i);
    return "subdiv:" + std::to_string(r.i) + "," + std::to_string(r.j);
}

CentralGraph central(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < g.size(); ++k) {
        auto [i, j] = g.edges()[k];
        edges.emplace_back(i, n + k);
        edges.emplace_back(j, n + k);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    return {g, Graph(n + g.size(), std::move(edges))};
}

}  // namespace tdc
