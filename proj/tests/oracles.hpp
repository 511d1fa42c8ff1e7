#pragma once

// Brute-force references used only by tests. Nothing here shares code with
// the solvers under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cycgraph/graph.hpp"
#include "cycgraph/group_spec.hpp"
#include "cycgraph/theorems.hpp"

namespace oracle {

using cycgraph::Element;
using cycgraph::FiniteGroup;
using cycgraph::Graph;

inline std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.vertex_count(), 0);
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (u != v && g.adjacent(u, v)) m[u] |= 1U << v;
  return m;
}

inline std::size_t alpha(const Graph& g) {
  const auto n = g.vertex_count();
  auto adj = masks(g);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if ((s >> v & 1U) && (adj[v] & s)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

// Minimum clique cover via DP over subsets: cover[S] = 1 + min over cliques C
// containing the lowest vertex of S of cover[S \ C].
inline std::size_t theta(const Graph& g) {
  const auto n = g.vertex_count();
  auto adj = masks(g);
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint8_t> clique(1U << n, 0);
  clique[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    clique[s] = clique[rest] && (adj[low] & rest) == rest;
  }
  std::vector<std::uint8_t> cover(1U << n, 255);
  cover[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & -s;
    const std::uint32_t others = s ^ low;
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      std::uint32_t c = sub | low;
      if (clique[c]) cover[s] = std::min<std::uint8_t>(cover[s], cover[s ^ c] + 1);
      if (sub == 0) break;
    }
  }
  return cover[full];
}

inline std::size_t gamma(const Graph& g) {
  const auto n = g.vertex_count();
  auto adj = masks(g);
  const std::uint32_t full = (1U << n) - 1;
  std::size_t best = n;
  for (std::uint32_t s = 0; s <= full; ++s) {
    std::uint32_t dom = s;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1U) dom |= adj[v];
    if (dom == full) best = std::min<std::size_t>(best, std::popcount(s));
  }
  return best;
}

inline Graph gcd_graph(std::uint64_t n) {
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d = 2; d < n; ++d)
    if (n % d == 0) ds.push_back(d);
  Graph g(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (std::gcd(ds[i], ds[j]) > 1) g.add_edge(i, j);
  return g;
}

// Proper nontrivial cyclic subgroups by taking every element's powers.
inline std::set<std::vector<Element>> naive_cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    std::vector<Element> s{g.identity()};
    for (Element y = x; y != g.identity(); y = g.mul(y, x)) s.push_back(y);
    std::sort(s.begin(), s.end());
    if (s.size() > 1 && s.size() < g.order()) out.insert(s);
  }
  return out;
}

inline std::size_t divisor_count(std::uint64_t n) {
  std::size_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Graph k33() {
  Graph g(6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) g.add_edge(i, j);
  return g;
}

inline Graph k6_minus_matching() {
  Graph g = Graph::complete(6);
  Graph out(6);
  for (auto [u, v] : g.edges())
    if (!(u % 2 == 0 && v == u + 1)) out.add_edge(u, v);
  return out;
}

inline Graph petersen() {
  Graph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// All intersection graphs of default_catalog(max_order) plus synthetic
// planarity witnesses and seeded random graphs.
inline std::vector<std::pair<std::string, Graph>> corpus(std::uint64_t max_order = 64) {
  std::vector<std::pair<std::string, Graph>> out;
  for (const auto& spec : cycgraph::default_catalog(max_order).specs)
    out.emplace_back(spec.to_string(), cycgraph::build(cycgraph::realize(spec)).graph);
  out.emplace_back("K5", Graph::complete(5));
  out.emplace_back("K3,3", k33());
  out.emplace_back("K6-matching", k6_minus_matching());
  out.emplace_back("petersen", petersen());
  out.emplace_back("K4", Graph::complete(4));
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < 60; ++i) {
    std::size_t n = 4 + i % 10;
    double p = 0.2 + 0.1 * static_cast<double>(i % 6);
    out.emplace_back("random" + std::to_string(i), random_graph(n, p, rng));
  }
  return out;
}

}  // namespace oracle
