#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cycgraph/graph.hpp"

namespace cycgraph {

// Caps for the exact solvers. Every solver is exact-or-skip: when a cap or
// the node budget is hit the result is std::nullopt, never an estimate.
struct SolverLimits {
  std::uint64_t node_budget = 5'000'000;
  std::size_t iso_size_cap = 32;
  std::size_t planarity_component_cap = 2000;
  std::size_t kuratowski_component_cap = 12;
};

// Paths and cycles are indexed by edge count: P1 = K2, C3 = triangle.
// K0 and K1 are complete; a star needs a center and at least one leaf.
struct ShapeChecks {
  bool complete = false;
  bool star = false;
  bool path = false;
  bool cycle = false;
  bool totally_disconnected = false;
};

ShapeChecks shape_checks(const Graph& g);

std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

// Shortest cycle length; std::nullopt means infinite (acyclic).
std::optional<std::size_t> girth(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_acyclic(const Graph& g);
bool has_triangle(const Graph& g);

// Throws GraphError(empty_graph) on the 0-vertex graph.
bool is_regular(const Graph& g);

// Exact planarity: per biconnected block, Euler bound then incremental face
// embedding. std::nullopt when a component exceeds the size cap.
std::optional<bool> is_planar(const Graph& g, const SolverLimits& limits = {});

// Independent check: true iff no K5 or K3,3 minor exists, searched by
// contracting edges from each subgraph-free state. std::nullopt when a
// component exceeds limits.kuratowski_component_cap vertices.
std::optional<bool> kuratowski_oracle(const Graph& g, const SolverLimits& limits = {});

std::optional<std::size_t> independence_number(const Graph& g, const SolverLimits& limits = {});

// Minimum number of cliques covering the vertices, computed as the chromatic
// number of the complement.
std::optional<std::size_t> clique_cover_number(const Graph& g, const SolverLimits& limits = {});

// Throws GraphError(empty_graph) on the 0-vertex graph.
std::optional<std::size_t> domination_number(const Graph& g, const SolverLimits& limits = {});

// std::nullopt when either graph exceeds limits.iso_size_cap vertices.
std::optional<bool> graph_isomorphic(const Graph& a, const Graph& b,
                                     const SolverLimits& limits = {});

struct ComponentShape {
  std::size_t size = 0;
  bool is_clique = false;
  auto operator<=>(const ComponentShape&) const = default;
};

// One entry per connected component, sorted descending.
std::vector<ComponentShape> component_structure(const Graph& g);

enum class Status { computed, skipped, undefined };

template <typename T>
struct Measured {
  Status status = Status::undefined;
  T value{};

  static Measured of(T v) { return {Status::computed, v}; }
  static Measured from(const std::optional<T>& v) {
    return v ? of(*v) : Measured{Status::skipped, T{}};
  }
  bool ok() const { return status == Status::computed; }
  friend bool operator==(const Measured&, const Measured&) = default;
};

struct InvariantReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  ShapeChecks shape;
  bool is_bipartite = false;
  bool is_acyclic = false;
  bool has_triangle = false;
  std::optional<std::size_t> girth;  // nullopt = infinite
  Measured<bool> is_planar;
  Measured<bool> is_regular;
  Measured<std::size_t> independence_number;
  Measured<std::size_t> clique_cover_number;
  Measured<std::size_t> domination_number;
  Measured<bool> weakly_alpha_perfect;
  std::vector<ComponentShape> component_structure;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport analyze(const Graph& g, const SolverLimits& limits = {});

}  // namespace cycgraph
