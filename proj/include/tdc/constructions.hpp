#pragma once

#include <utility>
#include <vector>

#include "tdc/central.hpp"
#include "tdc/coloring.hpp"
#include "tdc/families.hpp"

namespace tdc {

// Explicit min-TDC of the central graph of a family member, following the
// construction in the relevant proof (literal colorings for the small
// isomorphism cases). Class count always equals the family's closed form.
std::pair<CentralGraph, Coloring> construct_tdc_central(const FamilySpec& spec);

// TDS of central(K_n) of size n + ceil(n/2) - 1: originals v_1..v_{n-1} plus
// a near-perfect matching of subdivision vertices.
std::vector<int> construct_tds_central_complete(int n);

// TDC of central(g) built from a maximal simple path. For non-complete g
// (n >= 4) with a usable endpoint non-adjacency it has n + ceil(t/2) - 1
// classes, otherwise n + ceil(t/2); tiny graphs where the leftover
// subdivision class is empty come out one class smaller.
Coloring construct_tdc_central_longest_path(const Graph& g, const std::vector<int>& path);

// TDC of central(disjoint_union(gs)) with exactly n - w + 1 classes: one
// shared color per component on an adjacent pair, singletons elsewhere, one
// color for all subdivision vertices.
Coloring construct_tdc_central_union(const std::vector<Graph>& gs);

// Lifts a TDC of central(g) to central(join(g, empty_t)): base classes, one
// class of all cross subdivisions, one singleton per joined vertex.
Coloring construct_tdc_central_join_empty(const Graph& g, int t, const Coloring& base);

// TDC of complement(central(g)) with n classes when g is a tree, m classes
// otherwise (g connected, n >= 4). Pairs each vertex with a distinct incident
// subdivision vertex via bipartite matching.
Coloring construct_tdc_complement_central(const Graph& g);

}  // namespace tdc
