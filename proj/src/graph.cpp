#include "cycgraph/graph.hpp"

#include <numeric>

#include "cycgraph/number_theory.hpp"
#include "cycgraph/parallel.hpp"

namespace cycgraph {

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= rows_.size() || v >= rows_.size())
    throw GraphError(GraphErrorKind::index_out_of_range, "edge endpoint out of range");
  if (u == v) return;
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::degree(std::size_t v) const {
  if (v >= rows_.size())
    throw GraphError(GraphErrorKind::index_out_of_range,
                     "vertex " + std::to_string(v) + " out of range");
  return rows_[v].count();
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < rows_.size(); ++u)
    for (std::size_t v = rows_[u].next(u); v < rows_.size(); v = rows_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

Graph Graph::complement() const {
  const std::size_t n = rows_.size();
  Graph h(n);
  for (std::size_t u = 0; u < n; ++u) {
    h.rows_[u].set_all();
    h.rows_[u].and_not(rows_[u]);
    h.rows_[u].reset(u);
  }
  return h;
}

namespace {

std::vector<CyclicSubgroup> capped_vertices(const FiniteGroup& g, std::size_t vertex_cap) {
  auto subs = cyclic_subgroups(g);
  if (subs.size() > vertex_cap)
    throw GraphError(GraphErrorKind::vertex_cap_exceeded,
                     g.descriptor() + " has " + std::to_string(subs.size()) +
                         " cyclic subgroups, above vertex cap " + std::to_string(vertex_cap));
  return subs;
}

// True when the sorted sets share at least two elements (the identity is
// always shared).
bool meets_nontrivially(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::size_t common = 0, i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      if (++common == 2) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

}  // namespace

IntersectionGraph build(const FiniteGroup& g, std::size_t vertex_cap) {
  IntersectionGraph out{capped_vertices(g, vertex_cap), Graph(0), g.descriptor()};
  const std::size_t n = out.vertices.size();
  Graph graph(n);
  const auto& subs = out.vertices;

  // A nontrivial intersection always contains an element of prime order, and
  // those elements are exactly the non-identity members of the prime-order
  // vertices. Index, per such element, the vertices containing it.
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> slot(g.order(), kNone);
  std::vector<Bitset> containers;
  for (const auto& h : subs) {
    if (!is_prime(h.order())) continue;
    for (Element x : h.elements)
      if (x != g.identity()) {
        slot[x] = static_cast<std::uint32_t>(containers.size());
        containers.emplace_back(n);
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (Element x : subs[i].elements)
      if (slot[x] != kNone) containers[slot[x]].set(i);

  // Each task writes only its own row.
  parallel_for(n, [&](std::size_t i) {
    Bitset& row = graph.mutable_row(i);
    for (Element x : subs[i].elements)
      if (slot[x] != kNone) row |= containers[slot[x]];
    row.reset(i);
  });
  out.graph = std::move(graph);
  return out;
}

IntersectionGraph build_serial(const FiniteGroup& g, std::size_t vertex_cap) {
  IntersectionGraph out{capped_vertices(g, vertex_cap), Graph(0), g.descriptor()};
  const std::size_t n = out.vertices.size();
  Graph graph(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (meets_nontrivially(out.vertices[i].elements, out.vertices[j].elements))
        graph.add_edge(i, j);
  out.graph = std::move(graph);
  return out;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto d : divisors(n))
    if (d > 1 && d < n) out.push_back(d);
  return out;
}

Graph divisor_graph(std::uint64_t n) {
  auto ds = proper_divisors(n);
  Graph g(ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (std::gcd(ds[i], ds[j]) > 1) g.add_edge(i, j);
  return g;
}

}  // namespace cycgraph
