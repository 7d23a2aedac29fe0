#pragma once

#include "tdc/solvers.hpp"

namespace tdc {

inline constexpr int kDefaultChromaticCap = 64;

// Greedy clique, used to seed the chromatic lower bound.
int clique_lower_bound(const Graph& g);

// Exact chromatic number: iterative deepening on k with saturation-degree
// branching and canonical class opening.
ColoringSolveResult chromatic_number(const Graph& g, const SolveOptions& opts = {.cap = kDefaultChromaticCap});

}  // namespace tdc
