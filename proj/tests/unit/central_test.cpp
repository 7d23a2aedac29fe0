#include <doctest.h>

#include "tdc/central.hpp"
#include "tdc/chromatic.hpp"
#include "tdc/classify.hpp"
#include "tdc/enumerate.hpp"
#include "tdc/errors.hpp"
#include "tdc/families.hpp"

using namespace tdc;

namespace {

Graph family(const std::string& spec) { return build_family(FamilySpec::parse(spec)); }

}  // namespace

TEST_CASE("central of small graphs matches the known isomorphisms") {
    // C(K2) = P3
    CentralGraph ck2 = central(family("complete:2"));
    CHECK(ck2.result.order() == 3);
    CHECK(ck2.result.size() == 2);
    CHECK(ck2.result.degree(2) == 2);  // the subdivision vertex is the middle

    // C(P3) = C5
    CentralGraph cp3 = central(family("path:3"));
    CHECK(cp3.result.order() == 5);
    CHECK(cp3.result.size() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cp3.result.degree(v) == 2);
    CHECK(is_connected(cp3.result));

    // C(K3) = C6
    CentralGraph ck3 = central(family("complete:3"));
    CHECK(ck3.result.order() == 6);
    CHECK(ck3.result.size() == 6);
    for (int v = 0; v < 6; ++v) CHECK(ck3.result.degree(v) == 2);

    // C(K4): 10 vertices, 6 + 6 edges, bipartite
    CentralGraph ck4 = central(family("complete:4"));
    CHECK(ck4.result.order() == 10);
    CHECK(ck4.result.size() == 12);
    CHECK(chromatic_number(ck4.result).value == 2);
}

TEST_CASE("central invariants over every graph with n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_graphs(n, {}, [&](const Graph& g) {
            CentralGraph cg = central(g);
            CHECK(cg.result.order() == g.order() + g.size());
            CHECK(cg.result.size() == n * (n - 1) / 2 + g.size());
            for (int v = 0; v < g.order(); ++v) CHECK(cg.result.degree(v) == n - 1);
            for (int v = g.order(); v < cg.result.order(); ++v) CHECK(cg.result.degree(v) == 2);
            // original pair adjacent in the central graph iff non-adjacent in g
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    CHECK(cg.result.has_edge(i, j) == !g.has_edge(i, j));
        });
    }
}

TEST_CASE("central(K_n) is bipartite for n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        Graph c = central(family("complete:" + std::to_string(n))).result;
        CHECK(chromatic_number(c).value == 2);
    }
}

TEST_CASE("base graph is recoverable from the labeling") {
    for (const char* spec : {"path:5", "cycle:6", "complete:5", "wheel:4", "double_star:2"}) {
        Graph g = family(spec);
        CentralGraph cg = central(g);
        std::vector<std::pair<int, int>> recovered;
        for (int v = g.order(); v < cg.result.order(); ++v) {
            auto role = cg.role(v);
            REQUIRE(role.is_subdivision);
            CHECK(cg.subdivision_index(role.i, role.j) == v);
            CHECK(cg.subdivision_index(role.j, role.i) == v);
            recovered.emplace_back(role.i, role.j);
        }
        CHECK(Graph(g.order(), recovered) == g);
    }
}

TEST_CASE("subdivision lookup rejects non-edges") {
    CentralGraph cg = central(family("path:4"));
    CHECK_THROWS_AS(cg.subdivision_index(0, 2), ParameterError);
    CHECK(cg.role_label(0) == "original:0");
    CHECK(cg.role_label(4) == "subdiv:0,1");
}

TEST_CASE("central of a graph with isolated vertices is well-defined") {
    Graph g(3, {{0, 1}});  // vertex 2 isolated
    CentralGraph cg = central(g);
    CHECK(cg.result.order() == 4);
    // vertex 2 picks up joins to both non-neighbors
    CHECK(cg.result.degree(2) == 2);
}
