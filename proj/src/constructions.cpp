#include "tdc/constructions.hpp"

#include <algorithm>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

using Classes = std::vector<std::vector<int>>;

Coloring finish(const CentralGraph& cg, Classes classes) {
    classes.erase(std::remove_if(classes.begin(), classes.end(),
                                 [](const std::vector<int>& c) { return c.empty(); }),
                  classes.end());
    return Coloring::from_classes(cg.result.order(), classes);
}

std::vector<int> all_subdivisions(const CentralGraph& cg) {
    std::vector<int> out;
    for (int v = cg.base.order(); v < cg.result.order(); ++v) out.push_back(v);
    return out;
}

// 4-class TDC of any 5-cycle, given in cycle order.
Classes five_cycle_classes(const std::vector<int>& x) {
    return {{x[0]}, {x[1]}, {x[2], x[4]}, {x[3]}};
}

// 4-class TDC of any 6-cycle, given in cycle order.
Classes six_cycle_classes(const std::vector<int>& x) {
    return {{x[1]}, {x[4]}, {x[0], x[2]}, {x[3], x[5]}};
}

// Shared skeleton of the path/cycle colorings for n >= 5: vertices in
// path/cycle order get colors 1,1,2,3,3,4,... (1-based), the last vertex is
// lifted to its own color unless n = 0 mod 3, and all subdivision vertices
// share one final color.
Classes path_like_classes(const CentralGraph& cg, int n, bool lift_last) {
    int top = lift_last ? n - n / 3 : 2 * (n / 3) + (n % 3 ? 1 : 0);
    Classes classes(top + 1);
    for (int i = 1; i <= n; ++i) {
        int color;
        if (lift_last && i == n) color = n - n / 3;
        else if (i % 3 == 0) color = 2 * (i / 3);
        else color = 2 * (i / 3) + 1;
        classes[color - 1].push_back(i - 1);
    }
    classes[top] = all_subdivisions(cg);
    return classes;
}

Classes complete_classes(const CentralGraph& cg, int n) {
    // n >= 4: n-2 original singletons, one original pair, a near-perfect
    // matching of subdivision singletons (wrapping to (n-2, n-1) for odd n),
    // and one bulk class for the remaining subdivision vertices.
    Classes classes;
    for (int i = 0; i <= n - 3; ++i) classes.push_back({i});
    classes.push_back({n - 2, n - 1});
    std::vector<char> used(cg.result.order(), 0);
    for (int i = 0; 2 * i + 1 < n; ++i) {
        int c = cg.subdivision_index(2 * i, 2 * i + 1);
        classes.push_back({c});
        used[c] = 1;
    }
    if (n % 2 == 1) {
        int c = cg.subdivision_index(n - 2, n - 1);
        classes.push_back({c});
        used[c] = 1;
    }
    std::vector<int> rest;
    for (int v : all_subdivisions(cg))
        if (!used[v]) rest.push_back(v);
    classes.push_back(rest);
    return classes;
}

Classes path_classes(const CentralGraph& cg, int n) {
    switch (n) {
        case 2:
            return {{0, 1}, {cg.subdivision_index(0, 1)}};
        case 3:
            return five_cycle_classes(
                {0, cg.subdivision_index(0, 1), 1, cg.subdivision_index(1, 2), 2});
        case 4:
            return {{1},
                    {2},
                    {0, cg.subdivision_index(2, 3)},
                    {3, cg.subdivision_index(0, 1), cg.subdivision_index(1, 2)}};
        default:
            return path_like_classes(cg, n, n % 3 != 2 || n == 5);
    }
}

Classes cycle_classes(const CentralGraph& cg, int n) {
    switch (n) {
        case 3:
            return six_cycle_classes({0, cg.subdivision_index(0, 1), 1, cg.subdivision_index(1, 2),
                                      2, cg.subdivision_index(0, 2)});
        case 4:
            // explicit 4-class coloring: ({v1,c23,c34},{v2},{v3,c12,c41},{v4})
            return {{0, cg.subdivision_index(1, 2), cg.subdivision_index(2, 3)},
                    {1},
                    {2, cg.subdivision_index(0, 1), cg.subdivision_index(0, 3)},
                    {3}};
        default:
            return path_like_classes(cg, n, true);
    }
}

Classes bipartite_classes(const CentralGraph& cg, int m, int n) {
    // small side v_1..v_m = 0..m-1, large side u_1..u_n = m..m+n-1
    auto u = [&](int j) { return m + j - 1; };  // 1-based
    if (m == 1 && n == 1) return {{0, 1}, {cg.subdivision_index(0, 1)}};
    if (m == 1 && n == 2)
        return five_cycle_classes(
            {1, cg.subdivision_index(0, 1), 0, cg.subdivision_index(0, 2), 2});
    Classes classes;
    if (m == 1) {
        for (int j = 1; j <= n - 1; ++j) classes.push_back({u(j)});
        classes.push_back({0, u(n)});
        classes.push_back(all_subdivisions(cg));
        return classes;
    }
    if (m == 2) {
        for (int j = 1; j <= n; ++j) classes.push_back({u(j)});
        std::vector<int> with_v1{0}, with_v2{1};
        for (int j = 1; j <= n; ++j) {
            with_v1.push_back(cg.subdivision_index(1, u(j)));
            with_v2.push_back(cg.subdivision_index(0, u(j)));
        }
        classes.push_back(with_v1);
        classes.push_back(with_v2);
        return classes;
    }
    classes.push_back({0, u(1)});
    for (int j = 2; j <= n; ++j) classes.push_back({u(j)});
    for (int i = 2; i <= m; ++i) classes.push_back({i - 1});
    classes.push_back(all_subdivisions(cg));
    return classes;
}

Classes multipartite_classes(const CentralGraph& cg, const FamilySpec& spec) {
    // parts ascending, vertices grouped part by part
    const int n = spec.n;
    const auto& parts = spec.parts;
    const int p = static_cast<int>(parts.size());
    std::vector<int> part_start(p, 0);
    for (int i = 1; i < p; ++i) part_start[i] = part_start[i - 1] + parts[i - 1];
    const int t1 = singleton_part_count(spec);

    bool prefix_twos = true;
    for (int i = 0; i + 1 < p; ++i) prefix_twos = prefix_twos && parts[i] == 2;

    Classes classes;
    std::vector<char> in_pair(n, 0);
    auto push_singletons_except = [&](std::vector<int> skip) {
        for (int v = 0; v < n; ++v)
            if (std::find(skip.begin(), skip.end(), v) == skip.end()) classes.push_back({v});
    };

    if (prefix_twos) {
        // g0: {v_1, v_n}, all other originals singletons, {c(v_2, v_{n-1})}, rest.
        classes.push_back({0, n - 1});
        push_singletons_except({0, n - 1});
        int c = cg.subdivision_index(1, n - 2);
        classes.push_back({c});
        std::vector<int> rest;
        for (int v : all_subdivisions(cg))
            if (v != c) rest.push_back(v);
        classes.push_back(rest);
        return classes;
    }
    if (t1 == 0) {
        // g1: pair across the two largest parts, singletons, one class for C.
        int a = part_start[p - 2], b = part_start[p - 1];
        classes.push_back({a, b});
        push_singletons_except({a, b});
        classes.push_back(all_subdivisions(cg));
        return classes;
    }
    if (t1 >= 2) {
        // g2: {v_1, v_2}, singletons, matched subdivision singletons over the
        // singleton parts, rest.
        classes.push_back({0, 1});
        push_singletons_except({0, 1});
        std::vector<char> used(cg.result.order(), 0);
        int half = (t1 + 1) / 2;  // odd t1: last pair reaches into the next part
        for (int i = 0; i < half; ++i) {
            int c = cg.subdivision_index(2 * i, 2 * i + 1);
            classes.push_back({c});
            used[c] = 1;
        }
        std::vector<int> rest;
        for (int v : all_subdivisions(cg))
            if (!used[v]) rest.push_back(v);
        classes.push_back(rest);
        return classes;
    }
    // t1 == 1
    if (parts[p - 1] >= 3) {
        int b = part_start[p - 1];
        classes.push_back({0, b});
        push_singletons_except({0, b});
        int c = cg.subdivision_index(0, b);
        classes.push_back({c});
        std::vector<int> rest;
        for (int v : all_subdivisions(cg))
            if (v != c) rest.push_back(v);
        classes.push_back(rest);
        return classes;
    }
    // g3: K_{1,2,...,2}: X_1 = {v_1}, X_2 = {v_2, v_3}.
    classes.push_back({0, 1});
    push_singletons_except({0, 1});
    int c = cg.subdivision_index(0, 2);
    classes.push_back({c});
    std::vector<int> rest;
    for (int v : all_subdivisions(cg))
        if (v != c) rest.push_back(v);
    classes.push_back(rest);
    return classes;
}

Classes double_star_classes(const CentralGraph& cg, int n) {
    // {v_i, v_{n+i}} pairs, {v_0}, stalk subdivisions, center subdivisions
    Classes classes;
    for (int i = 1; i <= n; ++i) classes.push_back({i, n + i});
    classes.push_back({0});
    std::vector<int> stalk, center;
    for (int i = 1; i <= n; ++i) {
        stalk.push_back(cg.subdivision_index(i, n + i));
        center.push_back(cg.subdivision_index(0, i));
    }
    classes.push_back(stalk);
    classes.push_back(center);
    return classes;
}

Classes kn_minus_matching_classes(const CentralGraph& cg, int n) {
    // ({v_1},{v_2,v_3},{v_4},...,{v_n}, C): n classes on the witness family
    Classes classes;
    classes.push_back({0});
    classes.push_back({1, 2});
    for (int v = 3; v < n; ++v) classes.push_back({v});
    classes.push_back(all_subdivisions(cg));
    return classes;
}

// Rebuilds a coloring of central(src) as a coloring of central(dst), where
// perm is an isomorphism src -> dst on the base vertices.
Coloring relabel_central_coloring(const CentralGraph& src, const CentralGraph& dst,
                                  const std::vector<int>& perm, const Coloring& coloring) {
    Coloring out;
    out.assignment.assign(dst.result.order(), -1);
    out.num_classes = coloring.num_classes;
    for (int v = 0; v < src.result.order(); ++v) {
        auto role = src.role(v);
        int target = role.is_subdivision
                         ? dst.subdivision_index(perm[role.i], perm[role.j])
                         : perm[role.i];
        out.assignment[target] = coloring.assignment[v];
    }
    return out;
}

}  // namespace

std::pair<CentralGraph, Coloring> construct_tdc_central(const FamilySpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::kPath: {
            if (spec.n < 2) throw ParameterError("path TDC construction requires n >= 2");
            CentralGraph cg = central(build_family(spec));
            return {cg, finish(cg, path_classes(cg, spec.n))};
        }
        case Family::kCycle: {
            CentralGraph cg = central(build_family(spec));
            return {cg, finish(cg, cycle_classes(cg, spec.n))};
        }
        case Family::kComplete: {
            if (spec.n < 2) throw ParameterError("complete TDC construction requires n >= 2");
            CentralGraph cg = central(build_family(spec));
            if (spec.n == 2) return {cg, finish(cg, {{0, 1}, {cg.subdivision_index(0, 1)}})};
            if (spec.n == 3)
                return {cg, finish(cg, six_cycle_classes({0, cg.subdivision_index(0, 1), 1,
                                                          cg.subdivision_index(1, 2), 2,
                                                          cg.subdivision_index(0, 2)}))};
            return {cg, finish(cg, complete_classes(cg, spec.n))};
        }
        case Family::kWheel: {
            if (spec.n == 3)
                return construct_tdc_central({Family::kComplete, 4, {}});  // W_3 = K_4, same labels
            // wheels via the join reduction W_n = C_n o K_1, relabeled hub-first
            FamilySpec cycle_spec{Family::kCycle, spec.n, {}};
            Graph cyc = build_family(cycle_spec);
            Coloring base = construct_tdc_central(cycle_spec).second;
            Coloring lifted = construct_tdc_central_join_empty(cyc, 1, base);
            Graph joined = join(cyc, Graph(1));
            CentralGraph wheel_cg = central(build_family(spec));
            std::vector<int> perm(spec.n + 1);
            for (int i = 0; i < spec.n; ++i) perm[i] = i + 1;
            perm[spec.n] = 0;
            return {wheel_cg, relabel_central_coloring(central(joined), wheel_cg, perm, lifted)};
        }
        case Family::kCompleteMultipartite: {
            bool all_ones = singleton_part_count(spec) == static_cast<int>(spec.parts.size());
            if (all_ones) return construct_tdc_central({Family::kComplete, spec.n, {}});
            CentralGraph cg = central(build_family(spec));
            if (spec.parts.size() == 2)
                return {cg, finish(cg, bipartite_classes(cg, spec.parts[0], spec.parts[1]))};
            return {cg, finish(cg, multipartite_classes(cg, spec))};
        }
        case Family::kDoubleStar: {
            CentralGraph cg = central(build_family(spec));
            return {cg, finish(cg, double_star_classes(cg, spec.n))};
        }
        case Family::kKnMinusMatching: {
            CentralGraph cg = central(build_family(spec));
            return {cg, finish(cg, kn_minus_matching_classes(cg, spec.n))};
        }
        case Family::kEmpty:
            throw UnsupportedFamilyError("no cataloged TDC construction for the empty family");
    }
    throw ParameterError("unreachable family");
}

std::vector<int> construct_tds_central_complete(int n) {
    if (n < 2) throw ParameterError("construct_tds_central_complete requires n >= 2");
    CentralGraph cg = central(build_family({Family::kComplete, n, {}}));
    std::vector<int> s;
    for (int i = 0; i <= n - 2; ++i) s.push_back(i);
    for (int i = 0; 2 * i + 1 < n; ++i) s.push_back(cg.subdivision_index(2 * i, 2 * i + 1));
    if (n % 2 == 1) s.push_back(cg.subdivision_index(n - 2, n - 1));
    std::sort(s.begin(), s.end());
    return s;
}

Coloring construct_tdc_central_longest_path(const Graph& g, const std::vector<int>& path) {
    const int n = g.order();
    if (n < 2 || !is_connected(g))
        throw ParameterError("longest-path construction requires a connected graph of order >= 2");
    const int t = static_cast<int>(path.size());
    if (t < 2) throw ParameterError("path must have at least 2 vertices");
    std::vector<char> on_path(n, 0);
    for (int v : path) {
        if (v < 0 || v >= n) throw ParameterError("path vertex out of range");
        if (on_path[v]) throw ParameterError("path is not simple");
        on_path[v] = 1;
    }
    for (int i = 0; i + 1 < t; ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw ParameterError("path is not a path of g (missing edge " +
                                 std::to_string(path[i]) + "-" + std::to_string(path[i + 1]) + ")");
    for (int end : {path.front(), path.back()})
        for (int u : g.neighbors(end))
            if (!on_path[u])
                throw ParameterError("path is not maximal: vertex " + std::to_string(u) +
                                     " extends it at " + std::to_string(end));

    // proof order: path vertices first, then the rest ascending
    std::vector<int> order = path;
    for (int v = 0; v < n; ++v)
        if (!on_path[v]) order.push_back(v);

    const bool complete_base = g.size() == n * (n - 1) / 2;
    const bool reduced = !complete_base && n >= 4 && t >= 3 &&
                         (t < n || !g.has_edge(path.front(), path.back()));

    CentralGraph cg = central(g);
    Classes classes;
    std::vector<char> used(cg.result.order(), 0);
    auto c_single = [&](int a, int b) {
        int c = cg.subdivision_index(a, b);
        classes.push_back({c});
        used[c] = 1;
    };

    if (!reduced) {
        classes.push_back({order[0], order[1]});
        for (int i = 2; i < n; ++i) classes.push_back({order[i]});
        for (int k = 1; 2 * k <= t; ++k) c_single(path[2 * k - 2], path[2 * k - 1]);
        if (t % 2 == 1) c_single(path[t - 2], path[t - 1]);
    } else {
        classes.push_back({order[0]});
        classes.push_back({order[1], order[2]});
        for (int i = 3; i < n; ++i) classes.push_back({order[i]});
        for (int k = 1; k <= (t + 1) / 2 - 1; ++k) c_single(path[2 * k - 1], path[2 * k]);
    }
    std::vector<int> rest;
    for (int v = n; v < cg.result.order(); ++v)
        if (!used[v]) rest.push_back(v);
    classes.push_back(rest);
    return finish(cg, classes);
}

Coloring construct_tdc_central_union(const std::vector<Graph>& gs) {
    if (gs.size() < 2) throw ParameterError("union construction requires w >= 2 graphs");
    for (const Graph& g : gs) {
        if (g.order() < 2) throw ParameterError("union construction: every component needs order >= 2");
        if (g.min_degree() < 1)
            throw ParameterError("union construction: every component needs min degree >= 1");
    }
    Graph u = disjoint_union(gs);
    CentralGraph cg = central(u);
    Classes classes;
    int offset = 0;
    for (const Graph& g : gs) {
        auto [a, b] = g.edges().front();  // shared-color pair: first edge
        for (int v = 0; v < g.order(); ++v)
            if (v != a && v != b) classes.push_back({offset + v});
        classes.push_back({offset + a, offset + b});
        offset += g.order();
    }
    classes.push_back(all_subdivisions(cg));
    return finish(cg, classes);
}

Coloring construct_tdc_central_join_empty(const Graph& g, int t, const Coloring& base) {
    if (t < 1) throw ParameterError("join construction requires t >= 1");
    if (g.order() < 2) throw ParameterError("join construction requires |g| >= 2");
    CentralGraph cg = central(g);
    if (static_cast<int>(base.assignment.size()) != cg.result.order() || !is_tdc(cg.result, base).ok)
        throw ParameterError("base coloring is not a TDC of central(g)");

    const int n = g.order();
    Graph joined = join(g, Graph(t));
    CentralGraph jg = central(joined);

    Classes classes(base.num_classes + t + 1);
    for (int v = 0; v < cg.result.order(); ++v) {
        auto role = cg.role(v);
        int target = role.is_subdivision ? jg.subdivision_index(role.i, role.j) : role.i;
        classes[base.assignment[v]].push_back(target);
    }
    for (int k = 0; k < t; ++k) {  // cross subdivisions, one class
        for (int i = 0; i < n; ++i)
            classes[base.num_classes].push_back(jg.subdivision_index(i, n + k));
    }
    for (int k = 0; k < t; ++k) classes[base.num_classes + 1 + k] = {n + k};
    return finish(jg, classes);
}

namespace {

// Kuhn's augmenting-path matching: owner -> incident edge index.
bool try_assign(int w, const std::vector<std::vector<int>>& cand, std::vector<char>& visited,
                std::vector<int>& edge_owner) {
    for (int e : cand[w]) {
        if (visited[e]) continue;
        visited[e] = 1;
        if (edge_owner[e] < 0 || try_assign(edge_owner[e], cand, visited, edge_owner)) {
            edge_owner[e] = w;
            return true;
        }
    }
    return false;
}

}  // namespace

Coloring construct_tdc_complement_central(const Graph& g) {
    const int n = g.order();
    const int m = g.size();
    if (n < 4 || !is_connected(g))
        throw ParameterError("complement-central construction requires a connected graph, n >= 4");

    CentralGraph cg = central(g);
    const auto& edges = g.edges();

    auto edges_at = [&](int v, int skip_edge) {
        std::vector<int> out;
        for (int e = 0; e < m; ++e) {
            if (e == skip_edge) continue;
            if (edges[e].first == v || edges[e].second == v) out.push_back(e);
        }
        return out;
    };

    Classes classes;
    if (m == n - 1) {
        // tree case: v1 = a leaf, vn = its neighbor, v2
        // another neighbor of vn; reserve c(v1, vn) as a singleton.
        int v1 = -1;
        for (int v = 0; v < n && v1 < 0; ++v)
            if (g.degree(v) == 1) v1 = v;
        int vn = g.neighbors(v1).front();
        int v2 = -1;
        for (int u : g.neighbors(vn))
            if (u != v1) {
                v2 = u;
                break;
            }
        const std::pair<int, int> leaf_edge{std::min(v1, vn), std::max(v1, vn)};
        int reserved = -1;
        for (int e = 0; e < m; ++e)
            if (edges[e] == leaf_edge) reserved = e;

        std::vector<std::vector<int>> cand(n);
        std::vector<int> owners;
        for (int v = 0; v < n; ++v)
            if (v != v1 && v != v2) {
                owners.push_back(v);
                cand[v] = edges_at(v, reserved);
            }
        std::vector<int> edge_owner(m, -1);
        for (int w : owners) {
            std::vector<char> visited(m, 0);
            if (!try_assign(w, cand, visited, edge_owner))
                throw ParameterError("tree matching failed");  // cannot happen for trees
        }
        classes.push_back({v1, v2});
        std::vector<std::vector<int>> mine(n);
        for (int e = 0; e < m; ++e)
            if (edge_owner[e] >= 0)
                mine[edge_owner[e]].push_back(cg.base.order() + e);
        for (int w : owners) {
            std::vector<int> cls{w};
            cls.insert(cls.end(), mine[w].begin(), mine[w].end());
            classes.push_back(cls);
        }
        classes.push_back({cg.base.order() + reserved});
    } else {
        // m >= n: every vertex takes a distinct incident
        // subdivision vertex; leftovers become singletons.
        std::vector<std::vector<int>> cand(n);
        for (int v = 0; v < n; ++v) cand[v] = edges_at(v, -1);
        std::vector<int> edge_owner(m, -1);
        for (int v = 0; v < n; ++v) {
            std::vector<char> visited(m, 0);
            if (!try_assign(v, cand, visited, edge_owner))
                throw ParameterError("vertex-edge matching failed");  // impossible: m >= n, connected
        }
        std::vector<std::vector<int>> mine(n);
        std::vector<int> leftovers;
        for (int e = 0; e < m; ++e) {
            if (edge_owner[e] >= 0) mine[edge_owner[e]].push_back(cg.base.order() + e);
            else leftovers.push_back(cg.base.order() + e);
        }
        for (int v = 0; v < n; ++v) {
            std::vector<int> cls{v};
            cls.insert(cls.end(), mine[v].begin(), mine[v].end());
            classes.push_back(cls);
        }
        for (int c : leftovers) classes.push_back({c});
    }
    return Coloring::from_classes(cg.result.order(), classes);
}

}  // namespace tdc
