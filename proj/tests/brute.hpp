#pragma once

// Brute-force references for tests only. Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace brute {

// Every p^a q^b <= bound, by trial division of each integer.
inline std::vector<std::uint64_t> smooth_values(std::uint64_t p, std::uint64_t q,
                                                std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 1; v <= bound; ++v) {
    std::uint64_t r = v;
    while (r % p == 0) r /= p;
    while (r % q == 0) r /= q;
    if (r == 1) out.push_back(v);
  }
  return out;
}

// Number of subsets of the smooth values summing to n, for each n <= bound,
// by enumerating every subset.
inline std::vector<std::uint64_t> subset_counts(std::uint64_t p, std::uint64_t q,
                                                std::uint64_t bound) {
  const auto terms = smooth_values(p, q, bound);
  std::vector<std::uint64_t> counts(bound + 1, 0);
  const std::uint64_t subsets = std::uint64_t{1} << terms.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < terms.size() && sum <= bound; ++i)
      if (mask >> i & 1) sum += terms[i];
    if (sum <= bound) ++counts[sum];
  }
  return counts;
}

// Partitions of n into powers of m with parts at most max_part, by recursion.
inline std::uint64_t mary_partitions(std::uint64_t n, std::uint64_t m, std::uint64_t max_part) {
  if (n == 0) return 1;
  if (max_part == 1) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k * max_part <= n; ++k)
    total += mary_partitions(n - k * max_part, m, max_part / m);
  return total;
}

inline std::uint64_t mary_partitions(std::uint64_t n, std::uint64_t m) {
  std::uint64_t top = 1;
  while (top <= n / m) top *= m;
  return mary_partitions(n, m, top);
}

// Antichain subsets (no element divides another) summing to each n <= bound.
inline std::vector<std::uint64_t> antichain_counts(std::uint64_t p, std::uint64_t q,
                                                   std::uint64_t bound) {
  const auto terms = smooth_values(p, q, bound);
  std::vector<std::uint64_t> counts(bound + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << terms.size()); ++mask) {
    std::uint64_t sum = 0;
    bool ok = true;
    for (std::size_t i = 0; i < terms.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      sum += terms[i];
      for (std::size_t j = 0; j < i; ++j)
        if ((mask >> j & 1) && terms[i] % terms[j] == 0) ok = false;
    }
    if (ok && sum <= bound) ++counts[sum];
  }
  return counts;
}

}  // namespace brute
