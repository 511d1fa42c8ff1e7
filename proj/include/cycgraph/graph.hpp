#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cycgraph/bitset.hpp"
#include "cycgraph/group.hpp"
#include "cycgraph/subgroups.hpp"

namespace cycgraph {

enum class GraphErrorKind { vertex_cap_exceeded, index_out_of_range, empty_graph };

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph over 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);
  static Graph complete(std::size_t n);

  std::size_t vertex_count() const { return rows_.size(); }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
  Bitset& mutable_row(std::size_t v) { return rows_[v]; }

  // Throw GraphError(index_out_of_range) on a bad index.
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  Graph induced(const std::vector<std::size_t>& vertices) const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> rows_;
};

struct IntersectionGraph {
  std::vector<CyclicSubgroup> vertices;
  Graph graph;
  std::string source_descriptor;
};

constexpr std::size_t kDefaultVertexCap = 5000;

// Intersection graph of the proper nontrivial cyclic subgroups: vertices are
// adjacent iff they share a non-identity element. Rows are filled in
// parallel from an index of which vertices contain each prime-order element.
IntersectionGraph build(const FiniteGroup& g, std::size_t vertex_cap = kDefaultVertexCap);

// Single-threaded reference using sorted-set merges. Produces a graph
// identical to build().
IntersectionGraph build_serial(const FiniteGroup& g, std::size_t vertex_cap = kDefaultVertexCap);

// Graph of the cyclic group Z(n) from its divisors: vertex k is the k-th
// divisor d with 1 < d < n (ascending), edges where gcd > 1. Same vertex
// order as build(cyclic(n)).
Graph divisor_graph(std::uint64_t n);
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);

}  // namespace cycgraph
