#include "biq/exact_counter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace biq {
namespace {

void check_oracle_size(std::size_t n_max, std::size_t cap) {
  if (n_max < 1) throw std::invalid_argument("oracle: n_max must be >= 1");
  if (n_max > cap)
    throw std::length_error("oracle: n_max " + std::to_string(n_max) + " exceeds cap " +
                            std::to_string(cap));
}

std::vector<BigCount> knapsack_distinct_serial(std::span<const std::uint64_t> terms,
                                               std::size_t n_max) {
  std::vector<BigCount> v(n_max + 1, 0);
  v[0] = 1;
  for (std::uint64_t t : terms)
    for (std::size_t n = n_max; n >= t; --n) v[n] += v[n - t];
  return v;
}

std::vector<BigCount> knapsack_distinct_parallel(std::span<const std::uint64_t> terms,
                                                 std::size_t n_max) {
  std::vector<BigCount> cur(n_max + 1, 0), next(n_max + 1, 0);
  cur[0] = 1;
  const auto size = static_cast<std::int64_t>(n_max + 1);
  for (std::uint64_t t : terms) {
    const auto shift = static_cast<std::int64_t>(t);
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n < size; ++n) {
      if (n >= shift)
        mpz_add(next[n].get_mpz_t(), cur[n].get_mpz_t(), cur[n - shift].get_mpz_t());
      else
        next[n] = cur[n];
    }
    cur.swap(next);
  }
  return cur;
}

}  // namespace

CountTable count_distinct_representations(const BasePair& base, std::size_t n_max, Exec exec,
                                          std::size_t cap) {
  check_oracle_size(n_max, cap);
  const auto terms = term_values_u64(base, n_max);
  auto values = exec == Exec::serial ? knapsack_distinct_serial(terms, n_max)
                                     : knapsack_distinct_parallel(terms, n_max);
  return CountTable(TableKind::f_pq, {base.p(), base.q()}, Producer::oracle_dp,
                    std::move(values));
}

CountTable count_distinct_representations_ordered(const BasePair& base, std::size_t n_max,
                                                  std::span<const std::uint64_t> term_order) {
  check_oracle_size(n_max, kDefaultOracleCap);
  auto expected = term_values_u64(base, n_max);
  std::vector<std::uint64_t> given(term_order.begin(), term_order.end());
  std::sort(given.begin(), given.end());
  if (given != expected)
    throw std::invalid_argument("term order is not a permutation of the grid");
  return CountTable(TableKind::f_pq, {base.p(), base.q()}, Producer::oracle_dp,
                    knapsack_distinct_serial(term_order, n_max));
}

CountTable count_mary_partitions_oracle(std::uint64_t m, std::size_t n_max, Exec exec,
                                        std::size_t cap) {
  if (m < 2) throw std::invalid_argument("m-ary partitions need m >= 2");
  check_oracle_size(n_max, cap);
  std::vector<BigCount> v(n_max + 1, 0);
  v[0] = 1;
  for (std::uint64_t t = 1; t <= n_max; t *= m) {
    if (exec == Exec::serial) {
      for (std::size_t n = t; n <= n_max; ++n) v[n] += v[n - t];
    } else {
      const auto chains = static_cast<std::int64_t>(t);
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t r = 0; r < chains; ++r)
        for (std::size_t n = static_cast<std::size_t>(r) + t; n <= n_max; n += t)
          v[n] += v[n - t];
    }
    if (t > n_max / m) break;
  }
  return CountTable(TableKind::b_m, {0, m}, Producer::oracle_dp, std::move(v));
}

}  // namespace biq
