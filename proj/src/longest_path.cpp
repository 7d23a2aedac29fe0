#include "tdc/longest_path.hpp"

#include <bit>
#include <cstdint>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

struct PathSearch {
    std::vector<std::uint64_t> adj;
    std::vector<int> current, best_path;
    int best = 0;

    // Vertices of `allowed` reachable from v (v excluded unless in allowed).
    std::uint64_t reachable_from(int v, std::uint64_t allowed) const {
        std::uint64_t seen = adj[v] & allowed;
        std::uint64_t frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj[u] & allowed & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    void dfs(int v, std::uint64_t visited) {
        current.push_back(v);
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_path = current;
        }
        std::uint64_t room = reachable_from(v, ~visited);
        if (static_cast<int>(current.size()) + std::popcount(room) > best) {
            std::uint64_t cand = adj[v] & ~visited;
            while (cand) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                dfs(u, visited | (std::uint64_t{1} << u));
            }
        }
        current.pop_back();
    }
};

}  // namespace

LongestPathResult longest_path(const Graph& g, int cap) {
    const int n = g.order();
    if (cap > 64) cap = 64;
    if (n > cap)
        throw CapacityError("longest_path: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    PathSearch s;
    s.adj.resize(n);
    for (int v = 0; v < n; ++v) s.adj[v] = g.neighbor_mask(v);
    for (int v = 0; v < n; ++v) {
        if (s.best == n) break;
        s.dfs(v, std::uint64_t{1} << v);
    }
    return {s.best, s.best_path};
}

}  // namespace tdc
