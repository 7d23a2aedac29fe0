#include "tdc/coloring.hpp"

#include <algorithm>

#include "tdc/errors.hpp"

namespace tdc {

Coloring Coloring::from_classes(int n, const std::vector<std::vector<int>>& classes) {
    Coloring c;
    c.assignment.assign(n, -1);
    c.num_classes = static_cast<int>(classes.size());
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (classes[k].empty()) throw MalformedColoringError("empty class " + std::to_string(k));
        for (int v : classes[k]) {
            if (v < 0 || v >= n)
                throw MalformedColoringError("vertex " + std::to_string(v) + " out of range");
            if (c.assignment[v] != -1)
                throw MalformedColoringError("vertex " + std::to_string(v) + " assigned twice");
            c.assignment[v] = static_cast<int>(k);
        }
    }
    for (int v = 0; v < n; ++v)
        if (c.assignment[v] == -1)
            throw MalformedColoringError("vertex " + std::to_string(v) + " unassigned");
    return c;
}

std::vector<std::vector<int>> Coloring::classes() const {
    std::vector<std::vector<int>> out(num_classes);
    for (std::size_t v = 0; v < assignment.size(); ++v) out[assignment[v]].push_back(static_cast<int>(v));
    return out;
}

void validate_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.order())
        throw MalformedColoringError("assignment covers " + std::to_string(c.assignment.size()) +
                                     " vertices, graph has " + std::to_string(g.order()));
    if (c.num_classes < 1) throw MalformedColoringError("no color classes");
    std::vector<char> seen(c.num_classes, 0);
    for (int v = 0; v < g.order(); ++v) {
        int k = c.assignment[v];
        if (k < 0 || k >= c.num_classes)
            throw MalformedColoringError("class index " + std::to_string(k) + " of vertex " +
                                         std::to_string(v) + " outside 0.." +
                                         std::to_string(c.num_classes - 1));
        seen[k] = 1;
    }
    for (int k = 0; k < c.num_classes; ++k)
        if (!seen[k])
            throw MalformedColoringError("class " + std::to_string(k) +
                                         " is empty; classes must be contiguous");
}

ProperVerdict is_proper(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    for (auto [u, v] : g.edges())
        if (c.assignment[u] == c.assignment[v]) return {false, u, v};
    return {true, -1, -1};
}

std::vector<int> dominated_classes(const Graph& g, const Coloring& c, int v) {
    validate_coloring(g, c);
    if (v < 0 || v >= g.order()) throw ParameterError("vertex out of range");
    std::vector<int> class_size(c.num_classes, 0);
    for (int k : c.assignment) ++class_size[k];
    std::vector<int> inside(c.num_classes, 0);
    for (int u : g.neighbors(v)) ++inside[c.assignment[u]];
    std::vector<int> out;
    for (int k = 0; k < c.num_classes; ++k)
        if (inside[k] == class_size[k]) out.push_back(k);
    return out;
}

TdcVerdict is_tdc(const Graph& g, const Coloring& c) {
    if (g.min_degree() < 1)
        throw UndefinedInvariantError("TDC undefined: graph has an isolated vertex");
    ProperVerdict p = is_proper(g, c);
    if (!p.ok) return {false, TdcFailureKind::kProperness, -1, p.edge_u, p.edge_v};
    std::vector<int> class_size(c.num_classes, 0);
    for (int k : c.assignment) ++class_size[k];
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> inside(c.num_classes, 0);
        for (int u : g.neighbors(v)) ++inside[c.assignment[u]];
        bool dominates = false;
        for (int k = 0; k < c.num_classes && !dominates; ++k)
            dominates = inside[k] == class_size[k];
        if (!dominates) return {false, TdcFailureKind::kDomination, v, -1, -1};
    }
    return {true, TdcFailureKind::kNone, -1, -1, -1};
}

}  // namespace tdc
