#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

struct SolveStats {
    std::uint64_t nodes = 0;
    double seconds = 0;
};

struct ColoringSolveResult {
    int value = 0;
    Coloring witness;
    SolveStats stats;
};

struct SetSolveResult {
    int value = 0;
    std::vector<int> witness;  // sorted
    SolveStats stats;
};

struct SolveOptions {
    int cap = 40;                // order cap; hard ceiling 64 (bitmask solvers)
    double budget_seconds = 0;   // 0 = unlimited; on exceed, BudgetExceededError with bounds
};

// Exact total domination number by branch and bound over dominator choices.
// Requires min degree >= 1.
SetSolveResult total_domination_number(const Graph& g, const SolveOptions& opts = {});

// Exact total dominator chromatic number. Iterative deepening on the class
// count k from max{chi_lb, gamma_t, 2}; each level is a DFS with canonical
// class opening and domination-feasibility pruning. Requires min degree >= 1.
ColoringSolveResult tdc_number(const Graph& g, const SolveOptions& opts = {});

// Decision form: is there a TDC of g with at most k classes? Witness returned
// when feasible. Usable on its own to certify lower bounds.
std::optional<Coloring> tdc_feasible(const Graph& g, int k, const SolveOptions& opts = {},
                                     SolveStats* stats = nullptr);

// Checks a vertex set for the TDS property (every vertex has a neighbor in s).
bool is_total_dominating_set(const Graph& g, const std::vector<int>& s);

}  // namespace tdc
