#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

inline constexpr int kDefaultLongestPathCap = 32;

struct LongestPathResult {
    int order = 0;           // vertices on a longest simple path (t)
    std::vector<int> path;   // one witness
};

// Exact longest simple path via DFS over adjacency bitmasks.
// Throws CapacityError above the cap (exact search is exponential).
LongestPathResult longest_path(const Graph& g, int cap = kDefaultLongestPathCap);

}  // namespace tdc
