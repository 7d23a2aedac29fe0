#include "tdc/solvers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "tdc/chromatic.hpp"
#include "tdc/errors.hpp"

namespace tdc {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    bool active = false;
    Clock::time_point at{};

    static Deadline from_budget(Clock::time_point t0, double seconds) {
        Deadline d;
        if (seconds > 0) {
            d.active = true;
            d.at = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(seconds));
        }
        return d;
    }
    bool expired() const { return active && Clock::now() > at; }
};

void check_solvable(const Graph& g, const SolveOptions& opts, const char* op) {
    const int cap = std::min(opts.cap, 64);
    if (g.order() > cap)
        throw CapacityError(std::string(op) + ": order " + std::to_string(g.order()) +
                            " exceeds cap " + std::to_string(cap));
    if (g.min_degree() < 1)
        throw UndefinedInvariantError(std::string(op) + " undefined: isolated vertex present");
}

// ---------------------------------------------------------------------------
// total domination number

struct TdsSearch {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::uint64_t full = 0;
    int best = 0;
    std::vector<int> chosen, best_set;
    std::uint64_t* nodes = nullptr;
    Deadline deadline;

    void dfs(std::uint64_t dominated, std::uint64_t banned) {
        ++*nodes;
        if ((*nodes & 1023) == 0 && deadline.expired())
            throw BudgetExceededError("gamma_t budget exceeded", 0, best);
        if (dominated == full) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
            return;
        }
        std::uint64_t undom = full & ~dominated;
        // coverage bound: every added vertex dominates at most max |N(w) & undom|
        int maxcov = 0;
        for (int w = 0; w < n; ++w)
            maxcov = std::max(maxcov, std::popcount(adj[w] & undom));
        int need = (std::popcount(undom) + maxcov - 1) / maxcov;
        if (static_cast<int>(chosen.size()) + need >= best) return;

        // branch on the undominated vertex with fewest allowed dominators
        int pick = -1, pick_count = n + 1;
        std::uint64_t u = undom;
        while (u) {
            int v = std::countr_zero(u);
            u &= u - 1;
            int cnt = std::popcount(adj[v] & ~banned);
            if (cnt == 0) return;  // v can never be dominated on this branch
            if (cnt < pick_count) {
                pick = v;
                pick_count = cnt;
            }
        }
        std::vector<int> cands;
        std::uint64_t cm = adj[pick] & ~banned;
        while (cm) {
            int w = std::countr_zero(cm);
            cm &= cm - 1;
            cands.push_back(w);
        }
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            int ca = std::popcount(adj[a] & undom), cb = std::popcount(adj[b] & undom);
            return ca != cb ? ca > cb : a < b;
        });
        std::uint64_t local_ban = banned;
        for (int w : cands) {
            chosen.push_back(w);
            dfs(dominated | adj[w], local_ban);
            chosen.pop_back();
            local_ban |= std::uint64_t{1} << w;  // solutions with w already explored
        }
    }
};

std::vector<int> greedy_tds(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t dominated = 0;
    std::vector<int> s;
    while (dominated != full) {
        int best = -1, cover = -1;
        for (int v = 0; v < n; ++v) {
            int c = std::popcount(adj[v] & ~dominated);
            if (c > cover) {
                cover = c;
                best = v;
            }
        }
        s.push_back(best);
        dominated |= adj[best];
    }
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

bool is_total_dominating_set(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(g.order(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.order()) throw ParameterError("set member out of range");
        in[v] = 1;
    }
    for (int v = 0; v < g.order(); ++v) {
        bool hit = false;
        for (int u : g.neighbors(v))
            if (in[u]) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

SetSolveResult total_domination_number(const Graph& g, const SolveOptions& opts) {
    check_solvable(g, opts, "total_domination_number");
    auto t0 = Clock::now();
    SolveStats stats;

    const int n = g.order();
    TdsSearch s;
    s.n = n;
    s.adj.resize(n);
    for (int v = 0; v < n; ++v) s.adj[v] = g.neighbor_mask(v);
    s.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    s.best_set = greedy_tds(g);
    s.best = static_cast<int>(s.best_set.size());
    s.nodes = &stats.nodes;
    s.deadline = Deadline::from_budget(t0, opts.budget_seconds);

    try {
        s.dfs(0, 0);
    } catch (const BudgetExceededError&) {
        stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        throw BudgetExceededError("total_domination_number budget exceeded", 2, s.best);
    }
    std::sort(s.best_set.begin(), s.best_set.end());
    stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return {s.best, s.best_set, stats};
}

// ---------------------------------------------------------------------------
// total dominator chromatic number

namespace {

// Decision search for a TDC with at most k classes. Vertices are colored in a
// static order (degree descending, index ascending), so on central graphs the
// degree-2 subdivision vertices come last. A class may be opened only when all
// lower classes are open, which kills color permutations.
struct TdcSearch {
    int n = 0;
    int k = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> order;       // static branching order
    std::vector<int> color;
    std::uint64_t full = 0;

    // per-depth snapshots (restored on backtrack)
    // members[c]: vertices currently in class c
    // forbidden[v]: classes containing a neighbor of v
    // dom_ok[v]: open classes whose current members all lie inside N(v)
    std::vector<std::vector<std::uint64_t>> members_stack, forbidden_stack, dom_ok_stack;

    std::uint64_t* nodes = nullptr;
    Deadline deadline;

    bool feasible(int depth, int open, std::uint64_t unassigned) {
        ++*nodes;
        if ((*nodes & 1023) == 0 && deadline.expired())
            throw BudgetExceededError("tdc budget exceeded", 0, 0);
        if (depth == n) return true;

        auto& members = members_stack[depth];
        auto& forbidden = forbidden_stack[depth];
        auto& dom_ok = dom_ok_stack[depth];

        const int v = order[depth];
        const int limit = std::min(open + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (forbidden[v] & (std::uint64_t{1} << c)) continue;

            auto& nmembers = members_stack[depth + 1];
            auto& nforbidden = forbidden_stack[depth + 1];
            auto& ndom_ok = dom_ok_stack[depth + 1];
            nmembers = members;
            nforbidden = forbidden;
            ndom_ok = dom_ok;

            const std::uint64_t cbit = std::uint64_t{1} << c;
            const int nopen = std::max(open, c + 1);
            nmembers[c] |= std::uint64_t{1} << v;
            for (int u = 0; u < n; ++u) {
                if (adj[v] & (std::uint64_t{1} << u)) {
                    nforbidden[u] |= cbit;          // neighbor now shares class c
                    if (c == open) ndom_ok[u] |= cbit;  // fresh class {v} inside N(u)
                } else if (u != v) {
                    ndom_ok[u] &= ~cbit;            // v joined c outside N(u)
                }
            }
            ndom_ok[v] &= ~cbit;  // v never dominates its own class

            const std::uint64_t nunassigned = unassigned & ~(std::uint64_t{1} << v);
            if (propagate(nopen, nunassigned, nmembers, nforbidden, ndom_ok) &&
                feasible(depth + 1, nopen, nunassigned)) {
                color[v] = c;
                return true;
            }
        }
        return false;
    }

    bool propagate(int open, std::uint64_t unassigned, const std::vector<std::uint64_t>& members,
                   const std::vector<std::uint64_t>& forbidden,
                   const std::vector<std::uint64_t>& dom_ok) {
        (void)members;
        const bool can_add_class = open < k;
        const std::uint64_t open_mask =
            open >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << open) - 1;

        // every vertex must keep a live domination option
        std::uint64_t needy = 0;
        for (int u = 0; u < n; ++u) {
            if (dom_ok[u]) continue;
            if (!can_add_class || !(adj[u] & unassigned)) return false;
            needy |= std::uint64_t{1} << u;
        }
        // needy vertices with pairwise disjoint free neighborhoods force
        // pairwise distinct new classes
        if (needy) {
            int extra = 0;
            std::uint64_t used = 0;
            std::uint64_t q = needy;
            while (q) {
                int u = std::countr_zero(q);
                q &= q - 1;
                std::uint64_t m = adj[u] & unassigned;
                if ((m & used) == 0) {
                    ++extra;
                    used |= m;
                }
            }
            if (open + extra > k) return false;
        }
        // every unassigned vertex must keep an available color
        std::uint64_t q = unassigned;
        while (q) {
            int u = std::countr_zero(q);
            q &= q - 1;
            if (!can_add_class && (forbidden[u] & open_mask) == open_mask) return false;
        }
        return true;
    }
};

int tdc_lower_bound(const Graph& g, const SolveOptions& opts, SolveStats* stats) {
    int lb = 2;
    lb = std::max(lb, clique_lower_bound(g));
    SolveOptions gopts = opts;
    try {
        SetSolveResult gt = total_domination_number(g, gopts);
        if (stats) stats->nodes += gt.stats.nodes;
        lb = std::max(lb, gt.value);
    } catch (const BudgetExceededError&) {
        // fall back to the clique bound alone
    }
    return lb;
}

// Trivial all-singleton TDC (valid whenever min degree >= 1), refined by
// merging non-adjacent vertex pairs while the TDC property survives.
Coloring greedy_tdc(const Graph& g) {
    const int n = g.order();
    Coloring c;
    c.assignment.resize(n);
    for (int v = 0; v < n; ++v) c.assignment[v] = v;
    c.num_classes = n;

    bool improved = true;
    while (improved) {
        improved = false;
        for (int a = 0; a < c.num_classes && !improved; ++a) {
            for (int b = a + 1; b < c.num_classes && !improved; ++b) {
                Coloring merged;
                merged.assignment.resize(n);
                for (int v = 0; v < n; ++v) {
                    int k = c.assignment[v];
                    if (k == b) k = a;
                    else if (k > b) --k;
                    merged.assignment[v] = k;
                }
                merged.num_classes = c.num_classes - 1;
                bool proper_merge = true;
                for (auto [u, v] : g.edges())
                    if (merged.assignment[u] == merged.assignment[v]) {
                        proper_merge = false;
                        break;
                    }
                if (proper_merge && is_tdc(g, merged).ok) {
                    c = merged;
                    improved = true;
                }
            }
        }
    }
    return c;
}

}  // namespace

std::optional<Coloring> tdc_feasible(const Graph& g, int k, const SolveOptions& opts,
                                     SolveStats* stats) {
    check_solvable(g, opts, "tdc_feasible");
    if (k < 1) return std::nullopt;
    k = std::min(k, g.order());
    auto t0 = Clock::now();
    SolveStats local;

    const int n = g.order();
    TdcSearch s;
    s.n = n;
    s.k = k;
    s.adj.resize(n);
    for (int v = 0; v < n; ++v) s.adj[v] = g.neighbor_mask(v);
    s.order.resize(n);
    for (int v = 0; v < n; ++v) s.order[v] = v;
    std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    s.color.assign(n, -1);
    s.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    s.members_stack.assign(n + 1, std::vector<std::uint64_t>(k, 0));
    s.forbidden_stack.assign(n + 1, std::vector<std::uint64_t>(n, 0));
    s.dom_ok_stack.assign(n + 1, std::vector<std::uint64_t>(n, 0));
    s.nodes = &local.nodes;
    s.deadline = Deadline::from_budget(t0, opts.budget_seconds);

    bool found = s.feasible(0, 0, s.full);
    local.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (stats) {
        stats->nodes += local.nodes;
        stats->seconds += local.seconds;
    }
    if (!found) return std::nullopt;

    Coloring witness;
    witness.assignment = s.color;
    witness.num_classes = *std::max_element(s.color.begin(), s.color.end()) + 1;
    return witness;
}

ColoringSolveResult tdc_number(const Graph& g, const SolveOptions& opts) {
    check_solvable(g, opts, "tdc_number");
    auto t0 = Clock::now();
    SolveStats stats;

    SolveOptions inner = opts;
    const int lb = tdc_lower_bound(g, inner, &stats);
    Coloring ub_witness = greedy_tdc(g);
    const int ub = ub_witness.num_classes;

    auto remaining = [&]() -> double {
        if (opts.budget_seconds <= 0) return 0;
        double left = opts.budget_seconds -
                      std::chrono::duration<double>(Clock::now() - t0).count();
        return std::max(left, 1e-3);
    };

    for (int k = lb; k < ub; ++k) {
        inner.budget_seconds = remaining();
        std::optional<Coloring> w;
        try {
            w = tdc_feasible(g, k, inner, &stats);
        } catch (const BudgetExceededError&) {
            stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            throw BudgetExceededError("tdc_number budget exceeded", k, ub);
        }
        if (w) {
            stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
            return {w->num_classes, *w, stats};
        }
    }
    stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return {ub, ub_witness, stats};
}

}  // namespace tdc
