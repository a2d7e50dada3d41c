#include <doctest.h>

#include <algorithm>
#include <random>

#include "biq/exact_counter.hpp"
#include "brute.hpp"

using biq::BasePair;
using biq::Exec;

TEST_CASE("distinct-term oracle: frozen brute-force values") {
  const auto f23 = biq::count_distinct_representations({2, 3}, 20);
  const std::vector<unsigned long> expect{1, 1, 2, 2, 2, 3, 3, 3, 5};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(f23[n] == expect[n - 1]);
  CHECK(f23[0] == 1);

  const auto f34 = biq::count_distinct_representations({3, 4}, 13);
  CHECK(f34[2] == 0);
  CHECK(f34[4] == 2);
  CHECK(f34[5] == 1);
  CHECK(f34[13] == 3);

  CHECK(biq::count_distinct_representations({2, 5}, 10)[10] == 3);
}

TEST_CASE("distinct-term oracle agrees with subset enumeration") {
  for (auto [p, q, bound] : {std::tuple{2, 3, 60}, {3, 4, 60}, {2, 5, 200}, {5, 7, 300}, {3, 8, 250}}) {
    const auto brute = brute::subset_counts(p, q, bound);
    for (Exec exec : {Exec::serial, Exec::parallel}) {
      const auto t = biq::count_distinct_representations(BasePair(p, q), bound, exec);
      for (int n = 0; n <= bound; ++n) CHECK(t[n] == brute[n]);
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (auto base : {BasePair(2, 3), BasePair(3, 4), BasePair(5, 6)}) {
    CHECK(biq::count_distinct_representations(base, 5000, Exec::serial) ==
          biq::count_distinct_representations(base, 5000, Exec::parallel));
  }
  for (std::uint64_t m : {2, 3, 10}) {
    CHECK(biq::count_mary_partitions_oracle(m, 5000, Exec::serial) ==
          biq::count_mary_partitions_oracle(m, 5000, Exec::parallel));
  }
}

TEST_CASE("term order does not matter") {
  std::mt19937_64 rng(11);
  const BasePair base(3, 4);
  const auto reference = biq::count_distinct_representations(base, 3000, Exec::serial);
  auto order = biq::term_values_u64(base, 3000);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(biq::count_distinct_representations_ordered(base, 3000, order) == reference);
  }
  order.pop_back();
  CHECK_THROWS_AS(biq::count_distinct_representations_ordered(base, 3000, order),
                  std::invalid_argument);
}

TEST_CASE("upper bound and positivity on oracle tables") {
  const auto f = biq::count_distinct_representations({2, 7}, 2000);
  const auto terms = biq::term_values_u64({2, 7}, 2000);
  for (std::size_t n = 1; n <= 2000; ++n) {
    CHECK(f[n] >= 1);
    const auto e = std::upper_bound(terms.begin(), terms.end(), n) - terms.begin();
    mpz_class bound;
    mpz_setbit(bound.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    CHECK(f[n] <= bound);
  }
}

TEST_CASE("m-ary partition oracle") {
  const auto b3 = biq::count_mary_partitions_oracle(3, 9);
  const std::vector<unsigned long> expect{1, 1, 2, 2, 2, 3, 3, 3, 5};
  for (std::size_t n = 1; n <= 9; ++n) CHECK(b3[n] == expect[n - 1]);
  CHECK(biq::count_mary_partitions_oracle(2, 4)[4] == 4);
  for (std::uint64_t m = 2; m <= 9; ++m) {
    const auto t = biq::count_mary_partitions_oracle(m, 200);
    CHECK(t[1] == 1);
    for (std::uint64_t n = 0; n <= 200; ++n) CHECK(t[n] == brute::mary_partitions(n, m));
  }
}

TEST_CASE("oracle preconditions") {
  CHECK_THROWS_AS(biq::count_distinct_representations({2, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(biq::count_distinct_representations({2, 3}, 200'001), std::length_error);
  CHECK_THROWS_AS(biq::count_distinct_representations({2, 3}, 1001, Exec::serial, 1000),
                  std::length_error);
  CHECK_THROWS_AS(biq::count_mary_partitions_oracle(1, 10), std::invalid_argument);
}
