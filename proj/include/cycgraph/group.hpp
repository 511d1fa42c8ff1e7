#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycgraph {

using Element = std::uint32_t;

enum class GroupErrorKind {
  bad_shape,
  not_latin_square,
  no_identity,
  no_inverse,
  not_associative,
  order_cap_exceeded,
  invalid_permutation,
  invalid_parameter,
  parse_error,
  io_error,
};

const char* to_string(GroupErrorKind kind);

class GroupError : public std::runtime_error {
 public:
  GroupError(GroupErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GroupErrorKind kind() const { return kind_; }

 private:
  GroupErrorKind kind_;
};

struct GroupLimits {
  std::size_t order_cap = 20000;
  // Associativity is checked exhaustively only up to this order.
  std::size_t associativity_cap = 512;
  // Groups up to this order keep a materialized multiplication table.
  std::size_t table_limit = 4096;
};

// A finite group on the dense element indices 0..order()-1. Immutable and
// cheap to copy; copies share the underlying table or rule.
class FiniteGroup {
 public:
  using Rule = std::function<Element(Element, Element)>;

  // Builds from a closed-form rule. The table is materialized when the order
  // is within limits.table_limit. No validation is performed.
  FiniteGroup(std::size_t order, Element identity, Rule rule, std::string descriptor,
              const GroupLimits& limits = {});

  // Adopts a row-major table (entry a*order+b = a*b). No validation.
  static FiniteGroup from_table(std::size_t order, Element identity,
                                std::vector<std::uint16_t> table, std::string descriptor);

  std::size_t order() const;
  Element identity() const;
  const std::string& descriptor() const;
  bool has_table() const;

  Element mul(Element a, Element b) const;
  Element inverse(Element a) const;
  Element power(Element a, std::uint64_t k) const;

  // Row of the materialized table for `a`; empty when no table is held.
  std::span<const std::uint16_t> row(Element a) const;

 private:
  struct Rep;
  explicit FiniteGroup(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Runs the fixed check sequence shape -> Latin square -> identity -> inverses ->
// associativity and throws GroupError naming the first violation.
void validate(const FiniteGroup& g, const GroupLimits& limits = {});

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              std::string descriptor = "cayley-table",
                              const GroupLimits& limits = {});

using Permutation = std::vector<Element>;

// Parses cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Closure of `gens` under composition. Elements are numbered in breadth-first
// discovery order starting from the identity, expanding generators in
// lexicographic order.
FiniteGroup from_permutation_generators(std::size_t degree, std::vector<Permutation> gens,
                                        std::string descriptor = "perm-group",
                                        const GroupLimits& limits = {});

FiniteGroup cyclic(std::size_t n, const GroupLimits& limits = {});
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const GroupLimits& limits = {});
FiniteGroup dihedral(std::size_t n, const GroupLimits& limits = {});
FiniteGroup dicyclic(std::size_t m, const GroupLimits& limits = {});
FiniteGroup symmetric(std::size_t n, const GroupLimits& limits = {});
FiniteGroup alternating(std::size_t n, const GroupLimits& limits = {});
FiniteGroup elementary_abelian(std::size_t p, std::size_t k, const GroupLimits& limits = {});

// Isomorphic copy in which old element x becomes perm[x].
FiniteGroup relabel(const FiniteGroup& g, std::span<const Element> perm);

std::size_t element_order(const FiniteGroup& g, Element x);

// File ingestion (formats documented in README).
FiniteGroup read_cayley_file(const std::string& path, const GroupLimits& limits = {});
FiniteGroup read_perm_file(const std::string& path, const GroupLimits& limits = {});
void write_cayley_file(const FiniteGroup& g, const std::string& path);

}  // namespace cycgraph
