#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cycgraph {

// (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

Factorization factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);

// Returns true and fills p, alpha when n = p^alpha with alpha >= 1.
bool prime_power(std::uint64_t n, std::uint64_t& p, unsigned& alpha);

// Partitions of n as non-increasing part lists, largest first part first.
std::vector<std::vector<unsigned>> integer_partitions(unsigned n);
std::uint64_t partition_count(unsigned n);

}  // namespace cycgraph
