#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tdc/central.hpp"
#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

// Edge-list text: first line "n", then "i j" pairs, 0-based. Lines starting
// with '#' are comments (the central command emits provenance that way).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Central-graph edge list with one "# vertex v: original:i|subdiv:i,j"
// comment per vertex.
std::string format_central(const CentralGraph& cg);

// Witness files: {"assignment": [class per vertex]} for colorings,
// {"set": [vertices]} for dominating sets. Extra keys are ignored on read.
Coloring parse_coloring_json(const std::string& text);
std::string format_coloring_json(const Coloring& c);
std::vector<int> parse_vertex_set_json(const std::string& text);
std::string format_vertex_set_json(const std::vector<int>& s);

}  // namespace tdc
