#include <doctest.h>

#include "tdc/central.hpp"
#include "tdc/constructions.hpp"
#include "tdc/errors.hpp"
#include "tdc/families.hpp"
#include "tdc/formulas.hpp"
#include "tdc/longest_path.hpp"
#include "tdc/solvers.hpp"

using namespace tdc;

namespace {

Graph family(const std::string& spec) { return build_family(FamilySpec::parse(spec)); }

// universal postcondition: the construction verifies and hits the closed form
void certify(const std::string& spec) {
    auto [cg, coloring] = construct_tdc_central(FamilySpec::parse(spec));
    CAPTURE(spec);
    CHECK(is_tdc(cg.result, coloring).ok);
    CHECK(coloring.num_classes == formula_value(FamilySpec::parse(spec)));
}

}  // namespace

TEST_CASE("family constructions certify across the parameter grids") {
    for (int n = 2; n <= 12; ++n) certify("path:" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) certify("cycle:" + std::to_string(n));
    for (int n = 2; n <= 8; ++n) certify("complete:" + std::to_string(n));
    for (int n = 3; n <= 8; ++n) certify("wheel:" + std::to_string(n));
    for (int n = 1; n <= 4; ++n) certify("double_star:" + std::to_string(n));
    for (int n = 4; n <= 8; ++n) certify("kn_minus_matching:" + std::to_string(n));
    for (int m = 1; m <= 4; ++m)
        for (int n = m; m + n <= 10; ++n)
            certify("bipartite:" + std::to_string(m) + "," + std::to_string(n));
    for (const char* spec : {"multipartite:1,1,2", "multipartite:1,2,2", "multipartite:2,2,2",
                             "multipartite:3,3,3", "multipartite:1,1,3", "multipartite:1,3,3",
                             "multipartite:2,2,2,2", "multipartite:1,2,3", "multipartite:2,3,4",
                             "multipartite:1,1,1,2", "multipartite:1,1,1,1,2", "multipartite:2,2,3"})
        certify(spec);
}

TEST_CASE("illustrated minimum class counts") {
    auto count = [](const std::string& spec) {
        return construct_tdc_central(FamilySpec::parse(spec)).second.num_classes;
    };
    CHECK(count("path:8") == 6);
    CHECK(count("cycle:8") == 7);
    CHECK(count("complete:6") == 9);
    CHECK(count("bipartite:3,5") == 8);
    CHECK(count("multipartite:3,3,3") == 9);
    CHECK(count("double_star:3") == 6);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(construct_tdc_central(FamilySpec::parse("path:1")), ParameterError);
    CHECK_THROWS_AS(construct_tdc_central(FamilySpec::parse("empty:4")), UnsupportedFamilyError);
}

TEST_CASE("TDS of central(K_n) of size n + ceil(n/2) - 1") {
    for (int n = 2; n <= 10; ++n) {
        Graph c = central(family("complete:" + std::to_string(n))).result;
        auto s = construct_tds_central_complete(n);
        CHECK(static_cast<int>(s.size()) == n + (n + 1) / 2 - 1);
        CHECK(is_total_dominating_set(c, s));
    }
    CHECK(construct_tds_central_complete(2).size() == 2);
    CHECK(construct_tds_central_complete(4).size() == 5);
    CHECK(construct_tds_central_complete(5).size() == 7);
    CHECK_THROWS_AS(construct_tds_central_complete(1), ParameterError);
}

TEST_CASE("longest-path construction: general variant") {
    // P5 with its full path: at most 5 + 3 classes, valid
    Graph p5 = family("path:5");
    auto lp = longest_path(p5);
    Coloring c = construct_tdc_central_longest_path(p5, lp.path);
    CHECK(is_tdc(central(p5).result, c).ok);
    CHECK(c.num_classes <= 5 + 3);

    // C6 with a Hamiltonian path: at most 6 + 3 classes
    Graph c6 = family("cycle:6");
    auto lp6 = longest_path(c6);
    REQUIRE(lp6.order == 6);
    Coloring cc = construct_tdc_central_longest_path(c6, lp6.path);
    CHECK(is_tdc(central(c6).result, cc).ok);
    CHECK(cc.num_classes <= 6 + 3);

    // complete graphs use the n + ceil(t/2) variant
    Graph k5 = family("complete:5");
    Coloring kc = construct_tdc_central_longest_path(k5, longest_path(k5).path);
    CHECK(is_tdc(central(k5).result, kc).ok);
    CHECK(kc.num_classes == 5 + 3);
}

TEST_CASE("longest-path construction: non-complete variant saves a class") {
    // K4 minus an edge with a Hamiltonian path between the two non-adjacent
    // vertices: 4 + 2 - 1 = 5 classes
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});  // K4 minus {2,3}
    std::vector<int> path{2, 0, 1, 3};
    Coloring c = construct_tdc_central_longest_path(g, path);
    CHECK(is_tdc(central(g).result, c).ok);
    CHECK(c.num_classes == 5);
}

TEST_CASE("longest-path construction across family members") {
    std::vector<std::string> specs;
    for (int n = 2; n <= 6; ++n) specs.push_back("path:" + std::to_string(n));
    for (int n = 3; n <= 6; ++n) specs.push_back("cycle:" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) specs.push_back("complete:" + std::to_string(n));
    specs.insert(specs.end(), {"wheel:4", "double_star:2", "multipartite:1,3", "multipartite:2,3"});
    for (const auto& spec : specs) {
        Graph g = family(spec);
        auto lp = longest_path(g);
        Coloring c = construct_tdc_central_longest_path(g, lp.path);
        CAPTURE(spec);
        CHECK(is_tdc(central(g).result, c).ok);
    }
}

TEST_CASE("longest-path construction rejects bad paths") {
    Graph p5 = family("path:5");
    CHECK_THROWS_AS(construct_tdc_central_longest_path(p5, {0, 2}), ParameterError);       // not a path
    CHECK_THROWS_AS(construct_tdc_central_longest_path(p5, {0, 1, 0}), ParameterError);    // not simple
    CHECK_THROWS_AS(construct_tdc_central_longest_path(p5, {1, 2, 3}), ParameterError);    // not maximal
}

TEST_CASE("union construction reaches n - w + 1 classes") {
    auto check_union = [](std::vector<Graph> gs, int expected_classes) {
        Graph u = disjoint_union(gs);
        Coloring c = construct_tdc_central_union(gs);
        CHECK(is_tdc(central(u).result, c).ok);
        CHECK(c.num_classes == expected_classes);
    };
    check_union({family("complete:2"), family("complete:2")}, 3);   // n-w+1 = 3
    check_union({family("complete:3"), family("complete:3")}, 5);
    check_union({family("path:3"), family("cycle:4")}, 6);
    check_union({family("path:6"), family("path:6")}, 11);
    check_union({family("complete:2"), family("complete:2"), family("complete:3")}, 5);

    CHECK_THROWS_AS(construct_tdc_central_union({family("path:3")}), ParameterError);
    CHECK_THROWS_AS(construct_tdc_central_union({family("path:3"), Graph(1)}), ParameterError);
    CHECK_THROWS_AS(construct_tdc_central_union({family("path:3"), Graph(3, {{0, 1}})}),
                    ParameterError);  // isolated vertex inside a part
}

TEST_CASE("join construction lifts a base TDC by t + 1 classes") {
    // C5 with t = 1: base 5 classes -> 7 classes on C(W5)-shaped graph
    Graph c5 = family("cycle:5");
    Coloring base = construct_tdc_central(FamilySpec::parse("cycle:5")).second;
    REQUIRE(base.num_classes == 5);
    Coloring lifted = construct_tdc_central_join_empty(c5, 1, base);
    CHECK(lifted.num_classes == 7);
    CHECK(is_tdc(central(join(c5, Graph(1))).result, lifted).ok);

    // K2 with t = 2: 2 -> 5 classes
    Graph k2 = family("complete:2");
    Coloring kbase = construct_tdc_central(FamilySpec::parse("complete:2")).second;
    Coloring k_lifted = construct_tdc_central_join_empty(k2, 2, kbase);
    CHECK(k_lifted.num_classes == 5);
    CHECK(is_tdc(central(join(k2, Graph(2))).result, k_lifted).ok);

    // P4 with t = 1: 4 -> 6 classes
    Graph p4 = family("path:4");
    Coloring pbase = construct_tdc_central(FamilySpec::parse("path:4")).second;
    Coloring p_lifted = construct_tdc_central_join_empty(p4, 1, pbase);
    CHECK(p_lifted.num_classes == 6);
    CHECK(is_tdc(central(join(p4, Graph(1))).result, p_lifted).ok);

    // rejects a non-TDC base
    Coloring junk{{0, 0, 0, 0, 0, 0, 0}, 1};
    CHECK_THROWS_AS(construct_tdc_central_join_empty(p4, 1, junk), ParameterError);
}

TEST_CASE("complement-of-central construction: n for trees, m otherwise") {
    // trees get n classes
    for (const char* spec : {"path:4", "path:5", "path:6", "path:7", "double_star:2", "double_star:3"}) {
        Graph t = family(spec);
        Coloring c = construct_tdc_complement_central(t);
        Graph host = complement(central(t).result);
        CAPTURE(spec);
        CHECK(is_tdc(host, c).ok);
        CHECK(c.num_classes == t.order());
    }
    // star: the high-degree hub exercises the leaf-first relabeling
    Graph star = family("multipartite:1,5");
    Coloring sc = construct_tdc_complement_central(star);
    CHECK(is_tdc(complement(central(star).result), sc).ok);
    CHECK(sc.num_classes == 6);

    // m = n: C4 gives 4 classes
    Graph c4 = family("cycle:4");
    Coloring cc = construct_tdc_complement_central(c4);
    CHECK(is_tdc(complement(central(c4).result), cc).ok);
    CHECK(cc.num_classes == 4);

    // m > n: K4 gives m = 6 classes
    Graph k4 = family("complete:4");
    Coloring kc = construct_tdc_complement_central(k4);
    CHECK(is_tdc(complement(central(k4).result), kc).ok);
    CHECK(kc.num_classes == 6);

    // a connected (5,5) graph gives 5 classes
    Graph g55(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}});
    Coloring c55 = construct_tdc_complement_central(g55);
    CHECK(is_tdc(complement(central(g55).result), c55).ok);
    CHECK(c55.num_classes == 5);

    CHECK_THROWS_AS(construct_tdc_complement_central(family("path:3")), ParameterError);
    CHECK_THROWS_AS(construct_tdc_complement_central(disjoint_union({family("path:2"), family("path:2")})),
                    ParameterError);
}
