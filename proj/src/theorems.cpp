#include "cycgraph/theorems.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cycgraph/number_theory.hpp"
#include "cycgraph/parallel.hpp"
#include "cycgraph/subgroups.hpp"

namespace cycgraph {

bool same_outcome(const VerificationResult& a, const VerificationResult& b) {
  return a.theorem_id == b.theorem_id && a.domain_description == b.domain_description &&
         a.groups_tested == b.groups_tested && a.groups_skipped == b.groups_skipped &&
         a.groups_excluded == b.groups_excluded && a.passed == b.passed &&
         a.counterexamples == b.counterexamples && a.skipped == b.skipped && a.notes == b.notes;
}

Catalog default_catalog(std::uint64_t max_order) {
  Catalog c;
  c.max_order = max_order;
  std::set<std::string> seen;
  auto add = [&](GroupSpec s) {
    if (seen.insert(s.to_string()).second) c.specs.push_back(std::move(s));
  };
  std::uint64_t fact = 1;
  std::map<std::uint64_t, std::vector<GroupSpec>> sym_by_order;
  for (std::uint64_t n = 2; fact <= max_order * 2 && n < 21; ++n) {
    fact *= n;
    if (n >= 3 && fact <= max_order) sym_by_order[fact].push_back(GroupSpec::Symmetric(n));
    if (n >= 4 && fact / 2 <= max_order) sym_by_order[fact / 2].push_back(GroupSpec::Alternating(n));
  }
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    for (auto& s : abelian_groups_of_order(n)) add(std::move(s));
    if (n % 2 == 0 && n / 2 >= 4) add(GroupSpec::Dihedral(n / 2));
    if (n % 4 == 0 && n / 4 >= 2) add(GroupSpec::Dicyclic(n / 4));
    if (auto it = sym_by_order.find(n); it != sym_by_order.end()) {
      // Symmetric before alternating at equal order.
      std::stable_sort(it->second.begin(), it->second.end(),
                       [](const GroupSpec& a, const GroupSpec& b) {
                         return a.family == Family::symmetric && b.family != Family::symmetric;
                       });
      for (auto& s : it->second) add(s);
    }
  }
  return c;
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Verdict { pass, fail, skip, exclude };

struct Outcome {
  Verdict verdict = Verdict::pass;
  Counterexample counterexample;
  std::string reason;
  unsigned flags = 0;
};

Outcome fail(const std::string& group, std::string expected, std::string observed) {
  return {Verdict::fail, {group, std::move(expected), std::move(observed)}, {}, 0};
}
Outcome skip(std::string reason) { return {Verdict::skip, {}, std::move(reason), 0}; }
Outcome exclude() { return {Verdict::exclude, {}, {}, 0}; }

void merge(VerificationResult& r, const std::string& label, const Outcome& o) {
  switch (o.verdict) {
    case Verdict::pass: ++r.groups_tested; break;
    case Verdict::fail:
      ++r.groups_tested;
      r.counterexamples.push_back(o.counterexample);
      break;
    case Verdict::skip:
      ++r.groups_skipped;
      r.skipped.push_back(label + ": " + o.reason);
      break;
    case Verdict::exclude: ++r.groups_excluded; break;
  }
}

struct GroupCase {
  const GroupSpec& spec;
  const FiniteGroup& group;
  const IntersectionGraph& graph;
  std::string name() const { return spec.to_string(); }
};

using GroupCheck = std::function<Outcome(const GroupCase&)>;

// Realizes and builds every spec in parallel, then merges per-group outcomes
// in input order.
std::vector<Outcome> over_groups(VerificationResult& result, const std::vector<GroupSpec>& specs,
                                 const SuiteConfig& config, const GroupCheck& check) {
  std::vector<Outcome> outcomes(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    try {
      FiniteGroup g = realize(specs[i], config.group_limits);
      IntersectionGraph graph = build(g, config.vertex_cap);
      outcomes[i] = check(GroupCase{specs[i], g, graph});
    } catch (const GroupError& e) {
      outcomes[i] = skip(e.what());
    } catch (const GraphError& e) {
      outcomes[i] = skip(e.what());
    }
  });
  for (std::size_t i = 0; i < specs.size(); ++i) merge(result, specs[i].to_string(), outcomes[i]);
  return outcomes;
}

std::vector<Outcome> over_integers(VerificationResult& result, std::uint64_t lo, std::uint64_t hi,
                                   const std::function<Outcome(std::uint64_t)>& check) {
  const std::size_t count = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<Outcome> outcomes(count);
  parallel_for(count, [&](std::size_t i) { outcomes[i] = check(lo + i); });
  for (std::size_t i = 0; i < count; ++i)
    merge(result, "Z(" + std::to_string(lo + i) + ")", outcomes[i]);
  return outcomes;
}

VerificationResult start(std::string id, std::string domain) {
  VerificationResult r;
  r.theorem_id = std::move(id);
  r.domain_description = std::move(domain);
  return r;
}

void finish(VerificationResult& r, Clock::time_point t0) {
  r.passed = r.counterexamples.empty();
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

std::string catalog_domain(const Catalog& c) {
  return "default_catalog(max_order=" + std::to_string(c.max_order) + "): " +
         std::to_string(c.specs.size()) + " groups";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

bool order_is_prime_power(std::uint64_t n, unsigned alpha) {
  std::uint64_t p = 0;
  unsigned a = 0;
  return prime_power(n, p, a) && a == alpha;
}

// Order p, p^2 or pq.
bool small_cyclic_order(std::uint64_t k) {
  auto f = factorize(k);
  unsigned total = 0;
  for (auto [p, e] : f) total += e;
  return total == 1 || total == 2;
}

}  // namespace

bool in_planar_list(const std::vector<std::uint64_t>& inv) {
  if (inv.size() < 2) return false;
  if (is_prime(inv[0]) && std::all_of(inv.begin(), inv.end(), [&](auto d) { return d == inv[0]; }))
    return true;
  if (inv.size() != 2) return false;
  const auto a = inv[0], b = inv[1];
  if ((a == 4 && b == 2) || (a == 9 && b == 3) || (a == 4 && b == 4)) return true;
  return b == 2 && a % 2 == 0 && a / 2 > 2 && is_prime(a / 2);
}

std::uint64_t zn_degree_formula(std::uint64_t n, std::uint64_t d) {
  std::uint64_t coprime_part = 1;
  for (auto [p, e] : factorize(n))
    if (d % p != 0) coprime_part *= e + 1;
  return divisor_count(n) - 2 - coprime_part;
}

VerificationResult verify_iso_invariance(const GroupSpec& spec, std::size_t trials,
                                         const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("thm13-iso-invariance", spec.to_string() + ", " + std::to_string(trials) +
                                             " seeded relabelings");
  std::vector<GroupSpec> one{spec};
  over_groups(r, one, config, [&](const GroupCase& c) -> Outcome {
    if (c.graph.vertices.size() > config.solver.iso_size_cap)
      return skip("graph above isomorphism size cap");
    // Seed depends only on (seed, group text) so results are order-free.
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(std::hash<std::string>{}(c.name()))};
    std::mt19937_64 rng(seq);
    std::vector<Element> perm(c.group.order());
    for (std::size_t t = 0; t < trials; ++t) {
      std::iota(perm.begin(), perm.end(), Element{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      auto copy = relabel(c.group, perm);
      auto other = build(copy, config.vertex_cap);
      auto iso = graph_isomorphic(c.graph.graph, other.graph, config.solver);
      if (!iso) return skip("isomorphism search exceeded node budget");
      if (!*iso)
        return fail(c.name(), "isomorphic graph after relabeling",
                    "trial " + std::to_string(t) + " not isomorphic");
    }
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_iso_invariance(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  std::vector<std::uint8_t> eligible(catalog.specs.size(), 0);
  parallel_for(catalog.specs.size(), [&](std::size_t i) {
    try {
      auto g = realize(catalog.specs[i], config.group_limits);
      auto n = cyclic_subgroups(g).size();
      eligible[i] = n >= 2 && n <= config.solver.iso_size_cap;
    } catch (const GroupError&) {
    }
  });
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < eligible.size(); ++i)
    if (eligible[i]) candidates.push_back(i);
  std::vector<std::size_t> picks;
  const std::size_t want = std::min(config.iso_groups, candidates.size());
  for (std::size_t k = 0; k < want; ++k) picks.push_back(candidates[k * candidates.size() / want]);

  auto r = start("thm13-iso-invariance",
                 catalog_domain(catalog) + "; " + std::to_string(picks.size()) + " groups x " +
                     std::to_string(config.iso_trials) + " seeded relabelings");
  for (auto i : picks) {
    auto one = verify_iso_invariance(catalog.specs[i], config.iso_trials, config);
    r.groups_tested += one.groups_tested;
    r.groups_skipped += one.groups_skipped;
    r.counterexamples.insert(r.counterexamples.end(), one.counterexamples.begin(),
                             one.counterexamples.end());
    r.skipped.insert(r.skipped.end(), one.skipped.begin(), one.skipped.end());
    r.notes.push_back("checked " + catalog.specs[i].to_string());
  }
  finish(r, t0);
  return r;
}

VerificationResult verify_totally_disconnected(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("thm14-totally-disconnected",
                 catalog_domain(catalog) + "; graphs with >= 2 vertices");
  over_groups(r, catalog.specs, config, [](const GroupCase& c) -> Outcome {
    if (c.graph.vertices.size() < 2) return exclude();
    bool all_prime = true;
    for (Element x = 0; x < c.group.order() && all_prime; ++x)
      if (x != c.group.identity()) all_prime = is_prime(element_order(c.group, x));
    bool edgeless = c.graph.graph.edge_count() == 0;
    if (edgeless != all_prime)
      return fail(c.name(), "totally disconnected = " + yes_no(all_prime),
                  "totally disconnected = " + yes_no(edgeless) + " (" +
                      std::to_string(c.graph.vertices.size()) + " vertices)");
    return {};
  });
  r.notes.push_back("groups with fewer than 2 vertices are excluded: " +
                    std::to_string(r.groups_excluded));
  finish(r, t0);
  return r;
}

VerificationResult verify_complete(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("thm15-complete", catalog_domain(catalog) +
                                       "; biconditional on graphs with >= 2 vertices, vertex "
                                       "counts for Z(p^a) and Q(2^a)");
  over_groups(r, catalog.specs, config, [](const GroupCase& c) -> Outcome {
    const std::size_t v = c.graph.vertices.size();
    const bool complete = shape_checks(c.graph.graph).complete;
    const std::uint64_t n = c.group.order();
    std::uint64_t p = 0;
    unsigned alpha = 0;
    if (c.spec.family == Family::cyclic && prime_power(n, p, alpha) &&
        (v != alpha - 1 || !complete))
      return fail(c.name(), "K_" + std::to_string(alpha - 1),
                  std::to_string(v) + " vertices, complete = " + yes_no(complete));
    if (c.spec.family == Family::dicyclic && prime_power(n, p, alpha) && p == 2) {
      std::size_t want = (std::size_t{1} << (alpha - 2)) + alpha - 1;
      if (v != want || !complete)
        return fail(c.name(), "K_" + std::to_string(want),
                    std::to_string(v) + " vertices, complete = " + yes_no(complete));
    }
    if (v < 2) return exclude();
    const bool unique_prime = prime_order_subgroup_count(c.graph.vertices) == 1;
    if (complete != unique_prime)
      return fail(c.name(), "complete = " + yes_no(unique_prime),
                  "complete = " + yes_no(complete));
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_planarity_classification(std::uint64_t max_order,
                                                   const SuiteConfig& config) {
  auto t0 = Clock::now();
  std::vector<GroupSpec> specs;
  for (std::uint64_t n = 2; n <= max_order; ++n)
    for (auto& s : abelian_groups_of_order(n))
      if (s.abelian_invariants()->size() >= 2) specs.push_back(std::move(s));
  auto r = start("thm16-planarity", "non-cyclic abelian groups of order <= " +
                                        std::to_string(max_order) + ": " +
                                        std::to_string(specs.size()) + " groups");
  std::vector<std::string> planar(specs.size());
  auto outcomes = over_groups(r, specs, config, [&](const GroupCase& c) -> Outcome {
    auto planar_now = is_planar(c.graph.graph, config.solver);
    if (!planar_now) return skip("component above planarity size cap");
    bool expected = in_planar_list(*c.spec.abelian_invariants());
    if (*planar_now != expected)
      return fail(c.name(), "planar = " + yes_no(expected), "planar = " + yes_no(*planar_now));
    return {Verdict::pass, {}, {}, *planar_now ? 1U : 0U};
  });
  std::string planar_side;
  for (std::size_t i = 0; i < specs.size(); ++i)
    if (outcomes[i].verdict == Verdict::pass && outcomes[i].flags)
      planar_side += (planar_side.empty() ? "" : ", ") + specs[i].to_string();
  r.notes.push_back("planar: " + planar_side);
  finish(r, t0);
  return r;
}

VerificationResult verify_star_path_cycle(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("thm3-5-star-path-cycle", catalog_domain(catalog));
  over_groups(r, catalog.specs, config, [](const GroupCase& c) -> Outcome {
    const bool cyclic_group = is_cyclic_group(c.group);
    const bool p3 = cyclic_group && order_is_prime_power(c.group.order(), 3);
    const bool p4 = cyclic_group && order_is_prime_power(c.group.order(), 4);
    auto s = shape_checks(c.graph.graph);
    if (s.star != p3)
      return fail(c.name(), "star = " + yes_no(p3), "star = " + yes_no(s.star));
    if (s.path != p3)
      return fail(c.name(), "path = " + yes_no(p3), "path = " + yes_no(s.path));
    if (s.cycle != p4)
      return fail(c.name(), "cycle = " + yes_no(p4), "cycle = " + yes_no(s.cycle));
    if (s.cycle && c.graph.graph.edge_count() != 3)
      return fail(c.name(), "C_3", "cycle with " + std::to_string(c.graph.graph.edge_count()) +
                                       " edges");
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_girth(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("corc1-girth", catalog_domain(catalog));
  over_groups(r, catalog.specs, config, [](const GroupCase& c) -> Outcome {
    auto gi = girth(c.graph.graph);
    if (gi && *gi != 3) return fail(c.name(), "girth in {3, inf}", "girth " + std::to_string(*gi));
    if (gi.has_value() == is_acyclic(c.graph.graph))
      return fail(c.name(), "girth infinite iff acyclic", "mismatch");
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_acyclic_equivalences(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("thm7-acyclic", catalog_domain(catalog));
  constexpr unsigned kAcyclic = 1, kSome = 2, kEvery = 4;
  auto outcomes = over_groups(r, catalog.specs, config, [&](const GroupCase& c) -> Outcome {
    const Graph& g = c.graph.graph;
    const bool acyclic = is_acyclic(g), bipartite = is_bipartite(g), c3_free = !has_triangle(g);
    if (acyclic != bipartite || bipartite != c3_free)
      return fail(c.name(), "acyclic = bipartite = C3-free",
                  "acyclic " + yes_no(acyclic) + ", bipartite " + yes_no(bipartite) +
                      ", C3-free " + yes_no(c3_free));

    // Condition (1): maximal cyclic subgroups of order p, p^2 or pq, and no
    // two cyclic subgroups of order p^2 or pq meet nontrivially.
    const auto& vs = c.graph.vertices;
    bool disjoint = true;
    for (std::size_t i = 0; i < vs.size() && disjoint; ++i)
      for (std::size_t j = i + 1; j < vs.size() && disjoint; ++j) {
        bool both_small_composite = !is_prime(vs[i].order()) && !is_prime(vs[j].order()) &&
                                    small_cyclic_order(vs[i].order()) &&
                                    small_cyclic_order(vs[j].order());
        if (both_small_composite && g.adjacent(i, j)) disjoint = false;
      }
    // A cyclic group is its own unique maximal cyclic subgroup.
    auto maximal = maximal_cyclic_subgroups(c.group);
    std::vector<std::uint64_t> orders;
    if (maximal.group_is_cyclic) orders.push_back(c.group.order());
    else
      for (const auto& h : maximal.subgroups) orders.push_back(h.order());
    const bool some = disjoint && std::any_of(orders.begin(), orders.end(), small_cyclic_order);
    const bool every = disjoint && std::all_of(orders.begin(), orders.end(), small_cyclic_order);
    return {Verdict::pass, {}, {},
            (acyclic ? kAcyclic : 0U) | (some ? kSome : 0U) | (every ? kEvery : 0U)};
  });

  std::size_t considered = 0, some_agree = 0, every_agree = 0;
  std::string some_miss, every_miss;
  auto add_miss = [](std::string& list, const std::string& name) {
    if (std::count(list.begin(), list.end(), ',') < 7)
      list += (list.empty() ? "" : ", ") + name;
  };
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].verdict != Verdict::pass) continue;
    ++considered;
    const unsigned f = outcomes[i].flags;
    const bool acyclic = f & kAcyclic;
    if (bool(f & kSome) == acyclic) ++some_agree;
    else add_miss(some_miss, catalog.specs[i].to_string());
    if (bool(f & kEvery) == acyclic) ++every_agree;
    else add_miss(every_miss, catalog.specs[i].to_string());
  }
  r.notes.push_back("condition (1), existential reading: agrees on " + std::to_string(some_agree) +
                    "/" + std::to_string(considered) +
                    (some_miss.empty() ? "" : "; disagrees e.g. " + some_miss));
  r.notes.push_back("condition (1), universal reading: agrees on " + std::to_string(every_agree) +
                    "/" + std::to_string(considered) +
                    (every_miss.empty() ? "" : "; disagrees e.g. " + every_miss));
  finish(r, t0);
  return r;
}

VerificationResult verify_alpha_theta(const Catalog& catalog, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("thm8-alpha-theta", catalog_domain(catalog));
  over_groups(r, catalog.specs, config, [&](const GroupCase& c) -> Outcome {
    auto alpha = independence_number(c.graph.graph, config.solver);
    auto theta = clique_cover_number(c.graph.graph, config.solver);
    if (!alpha || !theta) return skip("solver node budget exhausted");
    const std::size_t m = prime_order_subgroup_count(c.graph.vertices);
    if (*alpha != m || *theta != m)
      return fail(c.name(), "alpha = theta = " + std::to_string(m),
                  "alpha = " + std::to_string(*alpha) + ", theta = " + std::to_string(*theta));
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_regular_zn(std::uint64_t max_n, const SuiteConfig&) {
  auto t0 = Clock::now();
  auto r = start("t24-regular-zn", "Z(n), 2 <= n <= " + std::to_string(max_n) +
                                       " with nonempty graph (divisor representation)");
  over_integers(r, 2, max_n, [](std::uint64_t n) -> Outcome {
    Graph g = divisor_graph(n);
    if (g.vertex_count() == 0) return exclude();
    std::uint64_t p = 0;
    unsigned alpha = 0;
    const bool expected = prime_power(n, p, alpha) && alpha >= 2;
    const bool regular = is_regular(g);
    if (regular != expected)
      return fail("Z(" + std::to_string(n) + ")", "regular = " + yes_no(expected),
                  "regular = " + yes_no(regular) + " (" + std::to_string(g.vertex_count()) +
                      " vertices, " + std::to_string(g.edge_count()) + " edges)");
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_degree_formula_zn(std::uint64_t max_n, const SuiteConfig&) {
  auto t0 = Clock::now();
  auto r = start("t24-degree-formula-zn", "Z(n), 2 <= n <= " + std::to_string(max_n) +
                                              " (divisor representation)");
  over_integers(r, 2, max_n, [](std::uint64_t n) -> Outcome {
    auto ds = proper_divisors(n);
    if (ds.empty()) return exclude();
    Graph g = divisor_graph(n);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      auto want = zn_degree_formula(n, ds[i]);
      if (g.degree(i) != want)
        return fail("Z(" + std::to_string(n) + ")",
                    "deg(order " + std::to_string(ds[i]) + ") = " + std::to_string(want),
                    std::to_string(g.degree(i)));
    }
    return {};
  });
  finish(r, t0);
  return r;
}

VerificationResult verify_domination_zn(std::uint64_t max_n, const SuiteConfig& config) {
  auto t0 = Clock::now();
  auto r = start("t22-domination-zn", "composite n <= " + std::to_string(max_n) +
                                          " (divisor representation)");
  over_integers(r, 2, max_n, [&](std::uint64_t n) -> Outcome {
    if (is_prime(n)) return exclude();
    Graph g = divisor_graph(n);
    auto f = factorize(n);
    const bool squarefree =
        std::all_of(f.begin(), f.end(), [](const auto& pe) { return pe.second == 1; });
    const std::size_t expected = squarefree ? 2 : 1;
    auto gamma = domination_number(g, config.solver);
    if (!gamma) return skip("solver node budget exhausted");
    if (*gamma != expected)
      return fail("Z(" + std::to_string(n) + ")", "gamma = " + std::to_string(expected),
                  "gamma = " + std::to_string(*gamma));
    return {};
  });
  finish(r, t0);
  return r;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "thm13-iso-invariance", "thm14-totally-disconnected", "thm15-complete",
      "thm16-planarity",      "thm3-5-star-path-cycle",     "corc1-girth",
      "thm7-acyclic",         "thm8-alpha-theta",           "t24-regular-zn",
      "t24-degree-formula-zn", "t22-domination-zn"};
  return ids;
}

VerificationResult run_theorem(const std::string& id, const SuiteBounds& bounds,
                               const SuiteConfig& config) {
  if (id == "thm16-planarity") return verify_planarity_classification(bounds.max_order, config);
  if (id == "t24-regular-zn") return verify_regular_zn(bounds.max_n, config);
  if (id == "t24-degree-formula-zn") return verify_degree_formula_zn(bounds.max_n, config);
  if (id == "t22-domination-zn") return verify_domination_zn(bounds.max_n, config);

  static const std::map<std::string,
                        std::function<VerificationResult(const Catalog&, const SuiteConfig&)>>
      catalog_checks{
          {"thm13-iso-invariance",
           [](const Catalog& c, const SuiteConfig& s) { return verify_iso_invariance(c, s); }},
          {"thm14-totally-disconnected", verify_totally_disconnected},
          {"thm15-complete", verify_complete},
          {"thm3-5-star-path-cycle", verify_star_path_cycle},
          {"corc1-girth", verify_girth},
          {"thm7-acyclic", verify_acyclic_equivalences},
          {"thm8-alpha-theta", verify_alpha_theta},
      };
  auto it = catalog_checks.find(id);
  if (it == catalog_checks.end()) throw UnknownTheoremId(id);
  return it->second(default_catalog(bounds.max_order), config);
}

}  // namespace cycgraph
