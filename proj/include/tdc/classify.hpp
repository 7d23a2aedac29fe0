#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

struct StructureTags {
    bool is_connected = false;
    bool is_tree = false;
    bool is_complete = false;
    bool is_complete_bipartite = false;
    bool is_complete_multipartite = false;
    std::vector<int> multipartite_parts;  // sorted ascending when is_complete_multipartite
    int min_degree = 0;
    int max_degree = 0;
};

StructureTags classify(const Graph& g);

}  // namespace tdc
