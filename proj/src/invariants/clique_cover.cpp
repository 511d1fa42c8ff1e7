#include <algorithm>

#include "cycgraph/invariants.hpp"

namespace cycgraph {

namespace {

// Exact chromatic number by saturation-ordered branch and bound.
class Colorer {
 public:
  Colorer(const Graph& g, std::uint64_t budget)
      : g_(g),
        n_(g.vertex_count()),
        budget_(budget),
        color_(n_, -1),
        conflicts_(n_, std::vector<std::uint32_t>(n_ + 1, 0)),
        saturation_(n_, 0) {}

  std::optional<std::size_t> chromatic_number(std::size_t lower_bound) {
    if (n_ == 0) return 0;
    lower_bound_ = std::max<std::size_t>(lower_bound, 1);
    best_ = greedy_dsatur();
    if (best_ > lower_bound_) search(0, 0);
    if (aborted_) return std::nullopt;
    return best_;
  }

 private:
  std::size_t pick() const {
    std::size_t best = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (best == n_ || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    g_.neighbors(v).for_each([&](std::size_t w) {
      if (conflicts_[w][static_cast<std::size_t>(c)]++ == 0) ++saturation_[w];
    });
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    color_[v] = -1;
    g_.neighbors(v).for_each([&](std::size_t w) {
      if (--conflicts_[w][static_cast<std::size_t>(c)] == 0) --saturation_[w];
    });
  }

  std::size_t greedy_dsatur() {
    std::size_t used = 0;
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t v = pick();
      std::size_t c = 0;
      while (conflicts_[v][c]) ++c;
      assign(v, static_cast<int>(c));
      order.push_back(v);
      used = std::max(used, c + 1);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) unassign(*it);
    return used;
  }

  void search(std::size_t colored, std::size_t used) {
    if (aborted_ || best_ == lower_bound_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (colored == n_) {
      best_ = std::min(best_, used);
      return;
    }
    const std::size_t v = pick();
    // Colors beyond `used` are interchangeable, so only one new color is tried.
    for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
      if (conflicts_[v][c]) continue;
      assign(v, static_cast<int>(c));
      search(colored + 1, std::max(used, c + 1));
      unassign(v);
      if (aborted_ || best_ == lower_bound_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t best_ = 0;
  std::size_t lower_bound_ = 1;
  std::vector<int> color_;
  std::vector<std::vector<std::uint32_t>> conflicts_;
  std::vector<std::size_t> saturation_;
};

// Greedy independent set of g (a clique of the complement): repeatedly take a
// minimum-degree vertex of what remains.
std::size_t greedy_independent_set(const Graph& g) {
  Bitset rest(g.vertex_count());
  rest.set_all();
  std::size_t size = 0;
  while (rest.any()) {
    std::size_t pick = rest.first(), pick_degree = g.vertex_count() + 1;
    rest.for_each([&](std::size_t v) {
      std::size_t d = g.neighbors(v).and_count(rest);
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    rest.and_not(g.neighbors(pick));
    rest.reset(pick);
    ++size;
  }
  return size;
}

}  // namespace

std::optional<std::size_t> clique_cover_number(const Graph& g, const SolverLimits& limits) {
  std::size_t total = 0;
  // Cliques never span components, so the cover splits per component.
  for (const auto& comp : connected_components(g)) {
    Graph h = g.induced(comp);
    Graph co = h.complement();
    auto chi = Colorer(co, limits.node_budget).chromatic_number(greedy_independent_set(h));
    if (!chi) return std::nullopt;
    total += *chi;
  }
  return total;
}

}  // namespace cycgraph
