#include "cycgraph/number_theory.hpp"

#include <algorithm>

namespace cycgraph {

Factorization factorize(std::uint64_t n) {
  Factorization f;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1U);
  return f;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t t = 1;
  for (auto [p, e] : factorize(n)) t *= e + 1;
  return t;
}

bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& alpha) {
  auto f = factorize(n);
  if (f.size() != 1) return false;
  p = f[0].first;
  alpha = f[0].second;
  return true;
}

namespace {

void partitions_into(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_into(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<unsigned>> integer_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions_into(n, n, cur, out);
  return out;
}

std::uint64_t partition_count(unsigned n) {
  // Standard DP over the largest allowed part.
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= n; ++part)
    for (unsigned s = part; s <= n; ++s) ways[s] += ways[s - part];
  return ways[n];
}

}  // namespace cycgraph
