#include <algorithm>
#include <map>

#include "cycgraph/invariants.hpp"

namespace cycgraph {

namespace {

// Vertex colour: degree plus the sorted multiset of neighbour degrees.
std::vector<std::vector<std::size_t>> signatures(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig[v].push_back(g.degree(v));
    g.neighbors(v).for_each([&](std::size_t w) { sig[v].push_back(g.degree(w)); });
    std::sort(sig[v].begin() + 1, sig[v].end());
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::vector<std::size_t> class_a,
          std::vector<std::size_t> class_b, std::uint64_t budget)
      : a_(a), b_(b), class_a_(std::move(class_a)), class_b_(std::move(class_b)),
        budget_(budget), map_(a.vertex_count()), used_(b.vertex_count(), 0) {
    build_order();
  }

  std::optional<bool> run() {
    bool found = extend(0);
    if (aborted_) return std::nullopt;
    return found;
  }

 private:
  // Rarest class first, then always the vertex with most mapped neighbours.
  void build_order() {
    const std::size_t n = a_.vertex_count();
    std::map<std::size_t, std::size_t> freq;
    for (auto c : class_a_) ++freq[c];
    std::vector<std::uint8_t> placed(n, 0);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || links[v] > links[best] ||
            (links[v] == links[best] && freq[class_a_[v]] < freq[class_a_[best]]))
          best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      a_.neighbors(best).for_each([&](std::size_t w) { ++links[w]; });
    }
  }

  bool consistent(std::size_t depth, std::size_t v, std::size_t w) const {
    for (std::size_t k = 0; k < depth; ++k) {
      std::size_t u = order_[k];
      if (a_.adjacent(u, v) != b_.adjacent(map_[u], w)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w] || class_b_[w] != class_a_[v] || !consistent(depth, v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::size_t> class_a_, class_b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<std::uint8_t> used_;
};

}  // namespace

std::optional<bool> graph_isomorphic(const Graph& a, const Graph& b, const SolverLimits& limits) {
  if (a.vertex_count() > limits.iso_size_cap || b.vertex_count() > limits.iso_size_cap)
    return std::nullopt;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

  auto sig_a = signatures(a), sig_b = signatures(b);
  std::map<std::vector<std::size_t>, std::size_t> ids;
  std::vector<std::size_t> class_a, class_b;
  for (const auto& s : sig_a) class_a.push_back(ids.emplace(s, ids.size()).first->second);
  for (const auto& s : sig_b) {
    auto it = ids.find(s);
    if (it == ids.end()) return false;
    class_b.push_back(it->second);
  }
  auto sorted_a = class_a, sorted_b = class_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;

  return Matcher(a, b, std::move(class_a), std::move(class_b), limits.node_budget).run();
}

}  // namespace cycgraph
