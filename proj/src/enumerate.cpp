#include "tdc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

constexpr int kMaxCertOrder = 11;  // C(11,2) = 55 adjacency bits + 8 order bits

struct CanonSearch {
    int n = 0;
    std::array<std::uint16_t, kMaxCertOrder> adj{};
    std::uint64_t best = ~std::uint64_t{0};

    using Colors = std::array<int, kMaxCertOrder>;

    int cell_count(const Colors& color) const {
        int maxc = 0;
        for (int v = 0; v < n; ++v) maxc = std::max(maxc, color[v]);
        return maxc + 1;
    }

    // Renumber colors to dense ranks 0..cells-1, preserving order.
    Colors normalize(const Colors& color) const {
        std::array<std::pair<int, int>, kMaxCertOrder> by_color;
        for (int v = 0; v < n; ++v) by_color[v] = {color[v], v};
        auto sorted = by_color;
        std::sort(sorted.begin(), sorted.begin() + n);
        Colors out{};
        int rank = -1, prev = -1;
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sorted[i].first != prev) ++rank;
            prev = sorted[i].first;
            out[sorted[i].second] = rank;
        }
        return out;
    }

    // 1-WL refinement to the coarsest stable partition below `color`.
    // Colors stay < n so they pack into the 4-bit signature nibbles.
    Colors refine(Colors color) const {
        color = normalize(color);
        int cells = cell_count(color);
        while (true) {
            std::array<std::pair<std::uint64_t, int>, kMaxCertOrder> sigs;
            for (int v = 0; v < n; ++v) {
                std::array<int, kMaxCertOrder> nb{};
                int deg = 0;
                for (int u = 0; u < n; ++u)
                    if (adj[v] & (1u << u)) nb[deg++] = color[u] + 1;
                std::sort(nb.begin(), nb.begin() + deg);
                std::uint64_t sig = static_cast<std::uint64_t>(color[v] + 1) << 48;
                for (int i = 0; i < deg; ++i) sig |= static_cast<std::uint64_t>(nb[i]) << (4 * i);
                sigs[v] = {sig, v};
            }
            auto sorted = sigs;
            std::sort(sorted.begin(), sorted.begin() + n);
            Colors next{};
            int rank = -1;
            std::uint64_t prev = 0;
            for (int i = 0; i < n; ++i) {
                if (i == 0 || sorted[i].first != prev) ++rank;
                prev = sorted[i].first;
                next[sorted[i].second] = rank;
            }
            int next_cells = rank + 1;
            if (next_cells == cells) return color;
            color = next;
            cells = next_cells;
        }
    }

    // Every cell internally complete/empty and every cell pair fully joined
    // or fully separated: then all consistent orders give the same string.
    bool uniform(const Colors& color) const {
        std::array<int, kMaxCertOrder> size{};
        std::array<std::array<int, kMaxCertOrder>, kMaxCertOrder> cnt{};
        for (int v = 0; v < n; ++v) ++size[color[v]];
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u] & (1u << v)) {
                    int a = std::min(color[u], color[v]), b = std::max(color[u], color[v]);
                    ++cnt[a][b];
                }
        const int cells = cell_count(color);
        for (int a = 0; a < cells; ++a)
            for (int b = a; b < cells; ++b) {
                int full = a == b ? size[a] * (size[a] - 1) / 2 : size[a] * size[b];
                if (cnt[a][b] != 0 && cnt[a][b] != full) return false;
            }
        return true;
    }

    std::uint64_t string_for(const Colors& color) const {
        std::array<int, kMaxCertOrder> order{};
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
            return color[a] != color[b] ? color[a] < color[b] : a < b;
        });
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits = (bits << 1) | ((adj[order[i]] >> order[j]) & 1u);
        return bits;
    }

    void search(const Colors& start) {
        Colors color = refine(start);
        if (cell_count(color) == n || uniform(color)) {
            best = std::min(best, string_for(color));
            return;
        }
        // individualize inside the first non-singleton cell
        int target = -1;
        std::array<int, kMaxCertOrder> size{};
        for (int v = 0; v < n; ++v) ++size[color[v]];
        for (int c = 0; c < n && target < 0; ++c)
            if (size[c] >= 2) target = c;
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            Colors split;
            for (int u = 0; u < n; ++u) split[u] = 2 * color[u] + (u == v ? 0 : 1);
            search(split);
        }
    }
};

}  // namespace

std::uint64_t canonical_certificate(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCertOrder)
        throw CapacityError("canonical_certificate: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxCertOrder));
    CanonSearch s;
    s.n = n;
    for (int v = 0; v < n; ++v)
        s.adj[v] = static_cast<std::uint16_t>(g.neighbor_mask(v));
    CanonSearch::Colors zero{};
    s.search(zero);
    return (static_cast<std::uint64_t>(n) << 56) | s.best;
}

Graph graph_from_certificate(std::uint64_t cert) {
    const int n = static_cast<int>(cert >> 56);
    const std::uint64_t bits = cert & ((std::uint64_t{1} << 56) - 1);
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if ((bits >> (pairs - 1 - t)) & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

void enumerate_graphs(int n, const EnumerateOptions& opts,
                      const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 9)
        throw ParameterError("enumerate_graphs supports 1 <= n <= 9, got " + std::to_string(n));

    std::vector<std::uint64_t> level{canonical_certificate(Graph(1))};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(level.size() * 8);
        for (std::uint64_t cert : level) {
            Graph parent = graph_from_certificate(cert);
            std::vector<std::pair<int, int>> base = parent.edges();
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                if (opts.connected_only && mask == 0) continue;
                std::vector<std::pair<int, int>> edges = base;
                for (int i = 0; i < k - 1; ++i)
                    if (mask & (1u << i)) edges.emplace_back(i, k - 1);
                seen.insert(canonical_certificate(Graph(k, std::move(edges))));
            }
        }
        level.assign(seen.begin(), seen.end());
        std::sort(level.begin(), level.end());
    }
    for (std::uint64_t cert : level) {
        Graph g = graph_from_certificate(cert);
        if (opts.connected_only && !is_connected(g)) continue;
        if (g.min_degree() < opts.min_degree) continue;
        fn(g);
    }
}

}  // namespace tdc
