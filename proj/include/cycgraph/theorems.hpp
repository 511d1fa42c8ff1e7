#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycgraph/graph.hpp"
#include "cycgraph/group_spec.hpp"
#include "cycgraph/invariants.hpp"

namespace cycgraph {

struct Counterexample {
  std::string group;  // GroupSpec text, reproducible with `cycgraph analyze`
  std::string expected;
  std::string observed;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Outcome of checking one theorem over one domain. `passed` holds exactly
// when `counterexamples` is empty. Skipped groups (cap or budget hits) and
// excluded groups (outside the theorem's stated domain) never count as
// tested.
struct VerificationResult {
  std::string theorem_id;
  std::string domain_description;
  std::size_t groups_tested = 0;
  std::size_t groups_skipped = 0;
  std::size_t groups_excluded = 0;
  bool passed = true;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> skipped;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};
};

// Same result modulo elapsed time.
bool same_outcome(const VerificationResult& a, const VerificationResult& b);

struct Catalog {
  std::vector<GroupSpec> specs;
  std::uint64_t max_order = 0;
};

// Every abelian group of order 2..max_order, D(n) for n >= 4, Dic(m) for
// m >= 2, S(n) for n >= 3 and A(n) for n >= 4, all within max_order. Small
// members of the non-abelian families that duplicate another entry
// (D(1) = Z(2), D(2) = Z(2)^2, D(3) = S(3), A(3) = Z(3)) are left out.
// Ordered by group order, then abelian, D, Dic, S, A.
Catalog default_catalog(std::uint64_t max_order);

struct SuiteConfig {
  GroupLimits group_limits;
  std::size_t vertex_cap = kDefaultVertexCap;
  SolverLimits solver;
  std::uint64_t seed = 1;
  std::size_t iso_trials = 20;
  std::size_t iso_groups = 10;
};

VerificationResult verify_iso_invariance(const GroupSpec& spec, std::size_t trials,
                                         const SuiteConfig& config = {});
// Runs the single-group check on config.iso_groups catalog members spread
// evenly over those whose graph has 2..iso_size_cap vertices.
VerificationResult verify_iso_invariance(const Catalog& catalog, const SuiteConfig& config = {});

VerificationResult verify_totally_disconnected(const Catalog& catalog, const SuiteConfig& config = {});
VerificationResult verify_complete(const Catalog& catalog, const SuiteConfig& config = {});
VerificationResult verify_planarity_classification(std::uint64_t max_order,
                                                   const SuiteConfig& config = {});
VerificationResult verify_star_path_cycle(const Catalog& catalog, const SuiteConfig& config = {});
VerificationResult verify_girth(const Catalog& catalog, const SuiteConfig& config = {});
VerificationResult verify_acyclic_equivalences(const Catalog& catalog, const SuiteConfig& config = {});
VerificationResult verify_alpha_theta(const Catalog& catalog, const SuiteConfig& config = {});
VerificationResult verify_regular_zn(std::uint64_t max_n, const SuiteConfig& config = {});
VerificationResult verify_degree_formula_zn(std::uint64_t max_n, const SuiteConfig& config = {});
VerificationResult verify_domination_zn(std::uint64_t max_n, const SuiteConfig& config = {});

// Membership in the planar list for non-cyclic abelian groups, by invariant
// factors: Z(p)^k, Z(4)xZ(2), Z(9)xZ(3), Z(2q)xZ(2) with q an odd prime,
// Z(4)xZ(4).
bool in_planar_list(const std::vector<std::uint64_t>& invariants);

// Degree of the divisor-d vertex of the Z(n) graph by the closed formula
// tau(n) - 2 - prod over primes p | n, p not dividing d, of (alpha_p + 1).
std::uint64_t zn_degree_formula(std::uint64_t n, std::uint64_t d);

class UnknownTheoremId : public std::invalid_argument {
 public:
  explicit UnknownTheoremId(const std::string& id)
      : std::invalid_argument("unknown theorem id '" + id + "'") {}
};

struct SuiteBounds {
  std::uint64_t max_order = 100;
  std::uint64_t max_n = 2000;
};

// Stable identifiers, in suite order.
const std::vector<std::string>& theorem_ids();

VerificationResult run_theorem(const std::string& id, const SuiteBounds& bounds,
                               const SuiteConfig& config = {});

}  // namespace cycgraph
