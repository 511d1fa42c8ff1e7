#include "cycgraph/invariants.hpp"

namespace cycgraph {

namespace {

class IndependentSetSolver {
 public:
  IndependentSetSolver(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::optional<std::size_t> solve(const Bitset& vertices) {
    best_ = 0;
    search(vertices, 0);
    if (aborted_) return std::nullopt;
    return best_;
  }

 private:
  std::size_t degree_in(std::size_t v, const Bitset& p) const { return g_.neighbors(v).and_count(p); }

  bool simplicial_in(std::size_t v, const Bitset& p) const {
    Bitset nb = g_.neighbors(v) & p;
    bool clique = true;
    nb.for_each([&](std::size_t u) {
      if (!clique) return;
      Bitset rest = nb;
      rest.reset(u);
      clique = rest.is_subset_of(g_.neighbors(u));
    });
    return clique;
  }

  // Upper bound on the independence number of G[p]: a greedy clique cover.
  std::size_t clique_cover_bound(const Bitset& p) const {
    std::vector<Bitset> open;  // vertices still adjacent to every member
    p.for_each([&](std::size_t v) {
      for (auto& c : open)
        if (c.test(v)) {
          c &= g_.neighbors(v);
          return;
        }
      open.push_back(g_.neighbors(v) & p);
    });
    return open.size();
  }

  void take(std::size_t v, Bitset& p, std::size_t& size) const {
    p.and_not(g_.neighbors(v));
    p.reset(v);
    ++size;
  }

  void search(Bitset p, std::size_t size) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    // A vertex whose remaining neighbourhood is a clique (in particular of
    // degree 0 or 1) belongs to some maximum independent set.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = p.first(); v < p.size(); v = p.next(v)) {
        if (degree_in(v, p) <= 1 || simplicial_in(v, p)) {
          take(v, p, size);
          changed = true;
        }
      }
    }
    if (p.none()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(p) <= best_) return;

    std::size_t pivot = p.first(), pivot_degree = 0;
    p.for_each([&](std::size_t v) {
      std::size_t d = degree_in(v, p);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });
    Bitset with = p;
    std::size_t with_size = size;
    take(pivot, with, with_size);
    search(std::move(with), with_size);
    p.reset(pivot);
    search(std::move(p), size);
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::size_t best_ = 0;
};

}  // namespace

std::optional<std::size_t> independence_number(const Graph& g, const SolverLimits& limits) {
  IndependentSetSolver solver(g, limits.node_budget);
  std::size_t total = 0;
  for (const auto& comp : connected_components(g)) {
    Bitset p(g.vertex_count());
    for (auto v : comp) p.set(v);
    auto a = solver.solve(p);
    if (!a) return std::nullopt;
    total += *a;
  }
  return total;
}

}  // namespace cycgraph
