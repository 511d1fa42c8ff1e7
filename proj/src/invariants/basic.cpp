#include <algorithm>
#include <deque>
#include <limits>

#include "cycgraph/invariants.hpp"

namespace cycgraph {

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      g.neighbors(comp[head]).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      });
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ShapeChecks shape_checks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  ShapeChecks s;
  s.totally_disconnected = m == 0;
  s.complete = m == n * (n > 0 ? n - 1 : 0) / 2;
  if (n < 2) return s;

  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  const bool connected = connected_components(g).size() == 1;

  const auto centers = std::count(deg.begin(), deg.end(), n - 1);
  const auto leaves = std::count(deg.begin(), deg.end(), std::size_t{1});
  s.star = m == n - 1 &&
           ((n == 2 && leaves == 2) || (n > 2 && centers == 1 && leaves == static_cast<long>(n - 1)));
  s.path = connected && m == n - 1 && *std::max_element(deg.begin(), deg.end()) <= 2;
  s.cycle = connected && n >= 3 &&
            std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
  return s;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  std::vector<std::size_t> dist(n), parent(n);
  for (std::size_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[root] = 0;
    parent[root] = n;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      g.neighbors(u).for_each([&](std::size_t w) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      bool ok = true;
      g.neighbors(u).for_each([&](std::size_t w) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

bool is_acyclic(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool has_triangle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    const Bitset& nu = g.neighbors(u);
    for (std::size_t v = nu.next(u); v < n; v = nu.next(v)) {
      // A common neighbour above v closes a triangle u < v < w.
      Bitset common = nu & g.neighbors(v);
      if (common.next(v) < n) return true;
    }
  }
  return false;
}

bool is_regular(const Graph& g) {
  if (g.vertex_count() == 0)
    throw GraphError(GraphErrorKind::empty_graph, "regularity is undefined on the empty graph");
  const std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

std::vector<ComponentShape> component_structure(const Graph& g) {
  std::vector<ComponentShape> out;
  for (const auto& comp : connected_components(g)) {
    std::size_t internal = 0;
    for (auto v : comp) internal += g.degree(v);
    internal /= 2;
    out.push_back({comp.size(), internal == comp.size() * (comp.size() - 1) / 2});
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

InvariantReport analyze(const Graph& g, const SolverLimits& limits) {
  InvariantReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.shape = shape_checks(g);
  r.is_bipartite = is_bipartite(g);
  r.is_acyclic = is_acyclic(g);
  r.has_triangle = has_triangle(g);
  r.girth = girth(g);
  r.is_planar = Measured<bool>::from(is_planar(g, limits));
  r.independence_number = Measured<std::size_t>::from(independence_number(g, limits));
  r.clique_cover_number = Measured<std::size_t>::from(clique_cover_number(g, limits));
  if (r.vertex_count > 0) {
    r.is_regular = Measured<bool>::of(is_regular(g));
    r.domination_number = Measured<std::size_t>::from(domination_number(g, limits));
  }
  if (r.independence_number.ok() && r.clique_cover_number.ok())
    r.weakly_alpha_perfect =
        Measured<bool>::of(r.independence_number.value == r.clique_cover_number.value);
  else
    r.weakly_alpha_perfect = {Status::skipped, false};
  r.component_structure = component_structure(g);
  return r;
}

}  // namespace cycgraph
