#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycgraph/invariants.hpp"
#include "oracles.hpp"

using namespace cycgraph;

namespace {

Graph of(const char* spec) { return build(realize(GroupSpec::parse(spec))).graph; }

Graph grid(std::size_t w, std::size_t h) {
  Graph g(w * h);
  for (std::size_t y = 0; y < h; ++y)
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) g.add_edge(y * w + x, y * w + x + 1);
      if (y + 1 < h) g.add_edge(y * w + x, (y + 1) * w + x);
    }
  return g;
}

// Subdivides every edge once.
Graph subdivided(const Graph& g) {
  auto es = g.edges();
  Graph h(g.vertex_count() + es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    h.add_edge(es[i].first, g.vertex_count() + i);
    h.add_edge(es[i].second, g.vertex_count() + i);
  }
  return h;
}

}  // namespace

TEST_CASE("synthetic witnesses") {
  CHECK(is_planar(Graph::complete(4)) == std::optional<bool>{true});
  CHECK(is_planar(Graph::complete(5)) == std::optional<bool>{false});
  CHECK(is_planar(oracle::k33()) == std::optional<bool>{false});
  CHECK(is_planar(oracle::k6_minus_matching()) == std::optional<bool>{true});
  CHECK(is_planar(oracle::petersen()) == std::optional<bool>{false});
  CHECK(is_planar(grid(8, 8)) == std::optional<bool>{true});
  CHECK(is_planar(subdivided(Graph::complete(5))) == std::optional<bool>{false});
  CHECK(is_planar(subdivided(oracle::k33())) == std::optional<bool>{false});
  CHECK(is_planar(Graph(0)) == std::optional<bool>{true});

  CHECK(kuratowski_oracle(Graph::complete(5)) == std::optional<bool>{false});
  CHECK(kuratowski_oracle(oracle::k33()) == std::optional<bool>{false});
  CHECK(kuratowski_oracle(oracle::petersen()) == std::optional<bool>{false});
  CHECK(kuratowski_oracle(oracle::k6_minus_matching()) == std::optional<bool>{true});
}

TEST_CASE("group graphs") {
  CHECK(is_planar(of("Q(8)")) == std::optional<bool>{true});
  CHECK(is_planar(of("Z(4)xZ(4)")) == std::optional<bool>{true});
  CHECK(is_planar(of("Z(9)xZ(3)")) == std::optional<bool>{true});
  CHECK(is_planar(of("Z(25)xZ(5)")) == std::optional<bool>{false});
  CHECK(is_planar(of("Z(8)xZ(2)")) == std::optional<bool>{false});
  CHECK(is_planar(of("Z(12)xZ(2)")) == std::optional<bool>{false});
}

TEST_CASE("is_planar agrees with the Kuratowski oracle on the corpus") {
  std::size_t checked = 0;
  for (const auto& [name, g] : oracle::corpus(64)) {
    if (g.vertex_count() > 12) continue;
    CAPTURE(name);
    auto fast = is_planar(g);
    auto slow = kuratowski_oracle(g);
    REQUIRE(fast.has_value());
    REQUIRE(slow.has_value());
    CHECK(*fast == *slow);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("random graphs up to 12 vertices") {
  std::mt19937_64 rng(5);
  std::size_t planar = 0, nonplanar = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 5 + static_cast<std::size_t>(t % 8);
    auto g = oracle::random_graph(n, 0.25 + 0.05 * (t % 8), rng);
    auto fast = is_planar(g);
    REQUIRE(fast.has_value());
    CHECK(fast == kuratowski_oracle(g));
    (*fast ? planar : nonplanar)++;
  }
  CHECK(planar > 20);
  CHECK(nonplanar > 20);
}

TEST_CASE("caps") {
  SolverLimits small;
  small.planarity_component_cap = 4;
  CHECK_FALSE(is_planar(Graph::complete(5), small).has_value());
  CHECK_FALSE(kuratowski_oracle(Graph::complete(13)).has_value());
}
