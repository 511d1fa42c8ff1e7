#pragma once

#include <cstddef>
#include <vector>

#include "cycgraph/group.hpp"

namespace cycgraph {

// A proper nontrivial cyclic subgroup <generator>. `elements` is sorted and
// `generator` is the smallest index that generates the set.
struct CyclicSubgroup {
  Element generator = 0;
  std::vector<Element> elements;

  std::size_t order() const { return elements.size(); }
  friend bool operator==(const CyclicSubgroup&, const CyclicSubgroup&) = default;
};

// All proper nontrivial cyclic subgroups, deduplicated and sorted by
// (order, elements lexicographic).
std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g);

// Number of proper cyclic subgroups of prime order. Zero for Z(p).
std::size_t prime_order_subgroup_count(const FiniteGroup& g);
std::size_t prime_order_subgroup_count(const std::vector<CyclicSubgroup>& subgroups);

struct MaximalCyclic {
  std::vector<CyclicSubgroup> subgroups;  // maximal among proper cyclic subgroups
  bool group_is_cyclic = false;
};

MaximalCyclic maximal_cyclic_subgroups(const FiniteGroup& g);

bool is_cyclic_group(const FiniteGroup& g);

}  // namespace cycgraph
