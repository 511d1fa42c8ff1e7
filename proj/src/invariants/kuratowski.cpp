#include <bit>
#include <string>
#include <unordered_set>

#include "cycgraph/invariants.hpp"

namespace cycgraph {

namespace {

using Masks = std::vector<std::uint32_t>;

int popcount(std::uint32_t x) { return std::popcount(x); }

std::size_t edge_count(const Masks& adj) {
  std::size_t e = 0;
  for (auto m : adj) e += static_cast<std::size_t>(popcount(m));
  return e / 2;
}

// Drops vertex v and renumbers the rest compactly.
Masks remove_vertex(const Masks& adj, std::size_t v) {
  Masks out;
  const std::uint32_t low = (1U << v) - 1;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (u == v) continue;
    std::uint32_t m = adj[u];
    out.push_back((m & low) | ((m >> 1) & ~low));
  }
  return out;
}

// Merges v into u (u != v) and removes v.
Masks contract(Masks adj, std::size_t u, std::size_t v) {
  std::uint32_t nv = adj[v] & ~(1U << u);
  adj[u] = (adj[u] | nv) & ~(1U << v);
  for (std::size_t w = 0; w < adj.size(); ++w)
    if (nv >> w & 1U) adj[w] |= 1U << u;
  return remove_vertex(adj, v);
}

// Deletes vertices of degree <= 1 and suppresses degree-2 vertices. Both
// preserve K5 and K3,3 minors.
Masks reduce(Masks adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      int d = popcount(adj[v]);
      if (d <= 1) {
        for (std::size_t w = 0; w < adj.size(); ++w) adj[w] &= ~(1U << v);
        adj = remove_vertex(adj, v);
        changed = true;
        break;
      }
      if (d == 2) {
        std::size_t a = static_cast<std::size_t>(std::countr_zero(adj[v]));
        adj = contract(adj, a, v);
        changed = true;
        break;
      }
    }
  }
  return adj;
}

bool has_k5_subgraph(const Masks& adj, std::uint32_t candidates, int need) {
  if (need == 0) return true;
  while (popcount(candidates) >= need) {
    std::size_t v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    if (has_k5_subgraph(adj, candidates & adj[v], need - 1)) return true;
  }
  return false;
}

bool has_k33_subgraph(const Masks& adj) {
  const std::size_t n = adj.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::uint32_t side = (1U << a) | (1U << b) | (1U << c);
        if (popcount(adj[a] & adj[b] & adj[c] & ~side) >= 3) return true;
      }
  return false;
}

class MinorSearch {
 public:
  bool has_minor(const Masks& input) {
    Masks adj = reduce(input);
    const std::size_t v = adj.size(), e = edge_count(adj);
    if (v < 5 || e < 9) return false;
    if (e > 3 * v - 6) return true;
    std::uint32_t all = v == 32 ? ~0U : (1U << v) - 1;
    if (has_k5_subgraph(adj, all, 5) || has_k33_subgraph(adj)) return true;

    std::string key(reinterpret_cast<const char*>(adj.data()), adj.size() * sizeof(std::uint32_t));
    if (failed_.count(key)) return false;
    // Any minor model that is not already a subgraph has a branch set with
    // an internal edge, so contracting every edge in turn is exhaustive.
    for (std::size_t x = 0; x < v; ++x)
      for (std::size_t y = x + 1; y < v; ++y)
        if ((adj[x] >> y & 1U) && has_minor(contract(adj, x, y))) return true;
    failed_.insert(std::move(key));
    return false;
  }

 private:
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<bool> kuratowski_oracle(const Graph& g, const SolverLimits& limits) {
  const std::size_t cap = std::min<std::size_t>(limits.kuratowski_component_cap, 32);
  auto components = connected_components(g);
  for (const auto& comp : components)
    if (comp.size() > cap) return std::nullopt;
  MinorSearch search;
  for (const auto& comp : components) {
    Masks adj(comp.size(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j)
        if (g.adjacent(comp[i], comp[j])) adj[i] |= 1U << j;
    if (search.has_minor(adj)) return false;
  }
  return true;
}

}  // namespace cycgraph
