#include "tdc/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

using Clock = std::chrono::steady_clock;

struct ChromaticSearch {
    int n = 0;
    int k = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> color;
    std::vector<std::uint64_t> forbidden;  // classes used by a neighbor
    int open = 0;
    std::uint64_t* nodes = nullptr;
    Clock::time_point deadline{};
    bool has_deadline = false;

    bool dfs(int colored) {
        ++*nodes;
        if (has_deadline && (*nodes & 1023) == 0 && Clock::now() > deadline)
            throw BudgetExceededError("chromatic budget exceeded", 0, 0);
        if (colored == n) return true;
        // saturation-degree branching: most distinct neighbor colors, then degree
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int sat = std::popcount(forbidden[v]);
            int deg = std::popcount(adj[v]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        const int limit = std::min(open + 1, k);  // class c only after 0..c-1 open
        for (int c = 0; c < limit; ++c) {
            if (forbidden[best] & (std::uint64_t{1} << c)) continue;
            color[best] = c;
            int prev_open = open;
            open = std::max(open, c + 1);
            std::vector<std::pair<int, std::uint64_t>> undo;
            std::uint64_t nb = adj[best];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (!(forbidden[u] & (std::uint64_t{1} << c))) {
                    undo.emplace_back(u, forbidden[u]);
                    forbidden[u] |= std::uint64_t{1} << c;
                }
            }
            if (dfs(colored + 1)) return true;
            for (auto& [u, f] : undo) forbidden[u] = f;
            color[best] = -1;
            open = prev_open;
        }
        return false;
    }
};

}  // namespace

int clique_lower_bound(const Graph& g) {
    const int n = g.order();
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    int best = n > 0 ? 1 : 0;
    for (int start : order) {
        std::vector<int> clique{start};
        for (int v : order) {
            if (v == start) continue;
            bool ok = true;
            for (int u : clique)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

ColoringSolveResult chromatic_number(const Graph& g, const SolveOptions& opts) {
    const int n = g.order();
    const int cap = std::min(opts.cap, 64);
    if (n > cap)
        throw CapacityError("chromatic_number: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    auto t0 = Clock::now();
    SolveStats stats;

    ChromaticSearch s;
    s.n = n;
    s.adj.resize(n);
    for (int v = 0; v < n; ++v) s.adj[v] = g.neighbor_mask(v);
    s.nodes = &stats.nodes;
    if (opts.budget_seconds > 0) {
        s.has_deadline = true;
        s.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(opts.budget_seconds));
    }

    const int lb = std::max(1, clique_lower_bound(g));
    for (int k = lb;; ++k) {
        s.k = k;
        s.color.assign(n, -1);
        s.forbidden.assign(n, 0);
        s.open = 0;
        bool found = false;
        try {
            found = s.dfs(0);
        } catch (const BudgetExceededError&) {
            stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            throw BudgetExceededError("chromatic_number budget exceeded", k, n);
        }
        if (found) {
            Coloring witness;
            witness.assignment = s.color;
            witness.num_classes = s.open;
            stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return {s.open, witness, stats};
        }
    }
}

}  // namespace tdc
