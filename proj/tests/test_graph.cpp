#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycgraph/invariants.hpp"
#include "oracles.hpp"

using namespace cycgraph;

namespace {

std::size_t index_of_order(const IntersectionGraph& g, std::size_t order) {
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.vertices[i].order() == order) return i;
  FAIL("no vertex of that order");
  return 0;
}

}  // namespace

TEST_CASE("element build of Z(n) equals the gcd oracle") {
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    auto g = build(cyclic(n));
    auto ds = proper_divisors(n);
    REQUIRE(g.vertices.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) REQUIRE(g.vertices[i].order() == ds[i]);
    if (!(g.graph == oracle::gcd_graph(n))) {
      CAPTURE(n);
      FAIL("graph differs from gcd oracle");
    }
    CHECK(divisor_graph(n) == g.graph);
  }
}

TEST_CASE("parallel build equals serial build") {
  for (const auto& spec : default_catalog(120).specs) {
    auto g = realize(spec);
    CAPTURE(spec.to_string());
    auto a = build(g), b = build_serial(g);
    CHECK(a.vertices == b.vertices);
    CHECK(a.graph == b.graph);
  }
  // Large enough to take the sorted-merge path in the parallel build.
  auto big = cyclic(5040);
  CHECK(build(big).graph == build_serial(big).graph);
  auto s7 = symmetric(7);
  CHECK(build(s7).graph == build_serial(s7).graph);
}

TEST_CASE("adjacency is nontrivial intersection") {
  for (const auto& spec : default_catalog(48).specs) {
    auto ig = build(realize(spec));
    for (std::size_t i = 0; i < ig.vertices.size(); ++i) {
      CHECK_FALSE(ig.graph.adjacent(i, i));
      for (std::size_t j = 0; j < ig.vertices.size(); ++j) {
        if (i == j) continue;
        std::vector<Element> common;
        std::set_intersection(ig.vertices[i].elements.begin(), ig.vertices[i].elements.end(),
                              ig.vertices[j].elements.begin(), ig.vertices[j].elements.end(),
                              std::back_inserter(common));
        CHECK(ig.graph.adjacent(i, j) == (common.size() >= 2));
      }
    }
  }
}

TEST_CASE("Z(4)xZ(2) is K3 plus two isolated vertices") {
  auto ig = build(direct_product(cyclic(4), cyclic(2)));
  CHECK(ig.vertices.size() == 5);
  CHECK(component_structure(ig.graph) ==
        std::vector<ComponentShape>{{3, true}, {1, true}, {1, true}});
}

TEST_CASE("Z(30) degrees") {
  auto ig = build(cyclic(30));
  CHECK(ig.graph.degree(index_of_order(ig, 6)) == 4);
  CHECK(ig.graph.degree(index_of_order(ig, 2)) == 2);
}

TEST_CASE("vertex cap") {
  try {
    build(elementary_abelian(2, 8), 100);
    FAIL("expected vertex cap error");
  } catch (const GraphError& e) {
    CHECK(e.kind() == GraphErrorKind::vertex_cap_exceeded);
  }
}

TEST_CASE("graph basics") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.complement().edge_count() == 4);
  CHECK(g.induced({0, 1}).edge_count() == 1);
  CHECK_THROWS_AS(g.degree(9), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), GraphError);
}
