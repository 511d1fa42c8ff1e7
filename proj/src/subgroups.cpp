#include "cycgraph/subgroups.hpp"

#include <algorithm>
#include <numeric>

#include "cycgraph/number_theory.hpp"

namespace cycgraph {

namespace {

// Powers x^0..x^(k-1) of x in generation order; k = ord(x).
std::vector<Element> powers(const FiniteGroup& g, Element x) {
  std::vector<Element> out{g.identity()};
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) out.push_back(y);
  return out;
}

}  // namespace

std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> done(n, 0);
  std::vector<CyclicSubgroup> out;
  done[g.identity()] = 1;
  // Visiting x in increasing index order makes x the smallest generator of
  // <x>; every other generator x^k (gcd(k, ord) = 1) is marked done.
  for (Element x = 0; x < n; ++x) {
    if (done[x]) continue;
    auto pw = powers(g, x);
    const std::size_t k = pw.size();
    for (std::size_t e = 1; e < k; ++e)
      if (std::gcd(e, k) == 1) done[pw[e]] = 1;
    if (k == n) continue;  // <x> = G is not a vertex
    std::sort(pw.begin(), pw.end());
    out.push_back({x, std::move(pw)});
  }
  std::sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::size_t prime_order_subgroup_count(const std::vector<CyclicSubgroup>& subgroups) {
  return static_cast<std::size_t>(std::count_if(
      subgroups.begin(), subgroups.end(), [](const auto& h) { return is_prime(h.order()); }));
}

std::size_t prime_order_subgroup_count(const FiniteGroup& g) {
  return prime_order_subgroup_count(cyclic_subgroups(g));
}

bool is_cyclic_group(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (element_order(g, x) == g.order()) return true;
  return false;
}

MaximalCyclic maximal_cyclic_subgroups(const FiniteGroup& g) {
  MaximalCyclic out;
  out.group_is_cyclic = is_cyclic_group(g);
  auto subs = cyclic_subgroups(g);
  // Sorted by order, so only later entries can strictly contain earlier ones.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    bool contained = false;
    for (std::size_t j = i + 1; j < subs.size() && !contained; ++j)
      contained = subs[j].order() > subs[i].order() &&
                  std::includes(subs[j].elements.begin(), subs[j].elements.end(),
                                subs[i].elements.begin(), subs[i].elements.end());
    if (!contained) out.subgroups.push_back(subs[i]);
  }
  return out;
}

}  // namespace cycgraph
