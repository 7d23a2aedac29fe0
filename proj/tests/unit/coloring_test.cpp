#include <doctest.h>

#include "tdc/central.hpp"
#include "tdc/chromatic.hpp"
#include "tdc/coloring.hpp"
#include "tdc/constructions.hpp"
#include "tdc/errors.hpp"
#include "tdc/families.hpp"

using namespace tdc;

namespace {

Graph family(const std::string& spec) { return build_family(FamilySpec::parse(spec)); }

}  // namespace

TEST_CASE("is_proper examples") {
    Graph k3 = family("complete:3");
    CHECK(is_proper(k3, Coloring{{0, 1, 2}, 3}).ok);

    auto bad = is_proper(k3, Coloring{{0, 0, 1}, 2});
    CHECK_FALSE(bad.ok);
    CHECK(bad.edge_u == 0);
    CHECK(bad.edge_v == 1);
}

TEST_CASE("malformed colorings are loud") {
    Graph p3 = family("path:3");
    CHECK_THROWS_AS(is_proper(p3, Coloring{{0, 1}, 2}), MalformedColoringError);
    CHECK_THROWS_AS(is_proper(p3, Coloring{{0, 2, 0}, 3}), MalformedColoringError);  // class 1 empty
    CHECK_THROWS_AS(is_proper(p3, Coloring{{0, 5, 0}, 2}), MalformedColoringError);
    CHECK_THROWS_AS(Coloring::from_classes(3, {{0, 1}, {}}), MalformedColoringError);
    CHECK_THROWS_AS(Coloring::from_classes(3, {{0, 1}, {1, 2}}), MalformedColoringError);
}

TEST_CASE("dominated_classes examples") {
    // C4 = v0 v1 v2 v3 with classes ({v0},{v2},{v1,v3})
    Graph c4 = family("cycle:4");
    Coloring c = Coloring::from_classes(4, {{0}, {2}, {1, 3}});
    CHECK(dominated_classes(c4, c, 0) == std::vector<int>{2});

    // central(K2) = P3, center dominates the class of the two ends
    CentralGraph ck2 = central(family("complete:2"));
    Coloring pc = Coloring::from_classes(3, {{0, 1}, {2}});
    CHECK(dominated_classes(ck2.result, pc, 2) == std::vector<int>{0});
    // an end dominates only the center class
    CHECK(dominated_classes(ck2.result, pc, 0) == std::vector<int>{1});
}

TEST_CASE("is_tdc examples") {
    // P3 with ({ends},{center})
    Graph p3 = family("path:3");
    CHECK(is_tdc(p3, Coloring::from_classes(3, {{0, 2}, {1}})).ok);

    // K4 with 3 classes is not even proper
    Graph k4 = family("complete:4");
    auto v = is_tdc(k4, Coloring{{0, 1, 2, 0}, 3});
    CHECK_FALSE(v.ok);
    CHECK(v.kind == TdcFailureKind::kProperness);

    // domination failure reports the first failing vertex
    Graph p4 = family("path:4");
    auto w = is_tdc(p4, Coloring::from_classes(4, {{0, 2}, {1, 3}}));
    CHECK_FALSE(w.ok);
    CHECK(w.kind == TdcFailureKind::kDomination);

    Graph isolated(2, {});
    CHECK_THROWS_AS(is_tdc(isolated, Coloring{{0, 1}, 2}), UndefinedInvariantError);
}

TEST_CASE("the illustrated 6-class coloring of C(P8) is a TDC") {
    // ({v1,v2},{v3},{v4,v5},{v6},{v7,v8}, C)
    CentralGraph cg = central(family("path:8"));
    std::vector<std::vector<int>> classes = {{0, 1}, {2}, {3, 4}, {5}, {6, 7}};
    std::vector<int> subs;
    for (int v = 8; v < cg.result.order(); ++v) subs.push_back(v);
    classes.push_back(subs);
    CHECK(is_tdc(cg.result, Coloring::from_classes(cg.result.order(), classes)).ok);
}

TEST_CASE("the complete-graph construction for C(K6) verifies with 9 classes") {
    auto [cg, coloring] = construct_tdc_central(FamilySpec::parse("complete:6"));
    CHECK(coloring.num_classes == 9);
    CHECK(is_tdc(cg.result, coloring).ok);
    CHECK(is_proper(cg.result, coloring).ok);
}

TEST_CASE("chromatic number examples") {
    CHECK(chromatic_number(family("complete:5")).value == 5);
    CHECK(chromatic_number(central(family("complete:4")).result).value == 2);
    CHECK(chromatic_number(family("cycle:5")).value == 3);
    CHECK(chromatic_number(family("cycle:6")).value == 2);
    CHECK(chromatic_number(Graph(1)).value == 1);

    auto r = chromatic_number(family("wheel:5"));
    CHECK(r.value == 4);
    CHECK(is_proper(family("wheel:5"), r.witness).ok);
    CHECK(r.witness.num_classes == 4);

    CHECK_THROWS_AS(chromatic_number(family("complete:9"), SolveOptions{8, 0}), CapacityError);
}
