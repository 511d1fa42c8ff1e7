#include "cycgraph/invariants.hpp"

namespace cycgraph {

namespace {

class DominationSolver {
 public:
  DominationSolver(const Graph& g, std::uint64_t budget) : budget_(budget) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      Bitset c = g.neighbors(v);
      c.set(v);
      closed_.push_back(std::move(c));
    }
  }

  // Iterative deepening over the dominating-set size within one component.
  std::optional<std::size_t> solve(const Bitset& component) {
    for (std::size_t k = 1; k <= component.count(); ++k) {
      bool found = dominate(component, k);
      if (aborted_) return std::nullopt;
      if (found) return k;
    }
    return component.count();
  }

 private:
  bool dominate(const Bitset& undominated, std::size_t k) {
    if (undominated.none()) return true;
    if (k == 0) return false;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }

    // Branch on the undominated vertex with the fewest possible dominators.
    std::size_t target = undominated.first(), target_options = closed_.size() + 1;
    undominated.for_each([&](std::size_t u) {
      std::size_t c = closed_[u].count();
      if (c < target_options) {
        target = u;
        target_options = c;
      }
    });

    std::vector<std::size_t> candidates;
    std::vector<Bitset> covers;
    closed_[target].for_each([&](std::size_t w) {
      candidates.push_back(w);
      covers.push_back(closed_[w] & undominated);
    });

    // No single vertex covers more than `widest` of what remains.
    std::size_t widest = 0;
    Bitset reach(undominated.size());
    undominated.for_each([&](std::size_t u) { reach |= closed_[u]; });
    reach.for_each(
        [&](std::size_t w) { widest = std::max(widest, closed_[w].and_count(undominated)); });
    if ((undominated.count() + widest - 1) / widest > k) return false;

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      // Skip a candidate whose cover is contained in another's (ties keep
      // the lowest index).
      bool dominated = false;
      for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
        if (i == j || !covers[i].is_subset_of(covers[j])) continue;
        dominated = covers[i] != covers[j] || j < i;
      }
      if (dominated) continue;
      Bitset next = undominated;
      next.and_not(covers[i]);
      if (dominate(next, k - 1)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  std::vector<Bitset> closed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

std::optional<std::size_t> domination_number(const Graph& g, const SolverLimits& limits) {
  if (g.vertex_count() == 0)
    throw GraphError(GraphErrorKind::empty_graph, "domination number is undefined on the empty graph");
  DominationSolver solver(g, limits.node_budget);
  std::size_t total = 0;
  for (const auto& comp : connected_components(g)) {
    Bitset c(g.vertex_count());
    for (auto v : comp) c.set(v);
    auto gamma = solver.solve(c);
    if (!gamma) return std::nullopt;
    total += *gamma;
  }
  return total;
}

}  // namespace cycgraph
