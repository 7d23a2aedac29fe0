#include "tdc/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"

namespace tdc {

int tdc_number_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 10)
        throw CapacityError("tdc_number_bruteforce: order " + std::to_string(n) + " exceeds cap 10");
    if (g.min_degree() < 1)
        throw UndefinedInvariantError("tdc_number_bruteforce undefined: isolated vertex present");

    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<int> a(n, 0);
    int best = n + 1;
    while (true) {
        int classes = *std::max_element(a.begin(), a.end()) + 1;
        if (classes < best) {
            Coloring c{a, classes};
            if (is_tdc(g, c).ok) best = classes;
        }
        // next RGS
        int i = n - 1;
        while (i > 0) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, a[j]);
            if (a[i] <= prefix_max) break;
            --i;
        }
        if (i == 0) break;
        ++a[i];
        for (int j = i + 1; j < n; ++j) a[j] = 0;
    }
    return best;
}

int gamma_t_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > 16)
        throw CapacityError("gamma_t_bruteforce: order " + std::to_string(n) + " exceeds cap 16");
    if (g.min_degree() < 1)
        throw UndefinedInvariantError("gamma_t_bruteforce undefined: isolated vertex present");

    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= std::uint32_t{1} << u;

    for (int size = 1; size <= n; ++size) {
        // Gosper's hack over size-subsets of n bits
        std::uint32_t s = (std::uint32_t{1} << size) - 1;
        const std::uint32_t bound = std::uint32_t{1} << n;
        while (s < bound) {
            bool tds = true;
            for (int v = 0; v < n && tds; ++v) tds = (adj[v] & s) != 0;
            if (tds) return size;
            std::uint32_t c = s & -s;
            std::uint32_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;  // unreachable for min degree >= 1
}

}  // namespace tdc
