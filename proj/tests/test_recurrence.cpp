#include <doctest.h>

#include "biq/exact_counter.hpp"
#include "biq/recurrence.hpp"
#include "brute.hpp"

TEST_CASE("f_{2,q} recurrence matches subset enumeration") {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const auto brute = brute::subset_counts(2, q, 120);
    const auto f = biq::tabulate_f2q(q, 120);
    for (std::size_t n = 0; n <= 120; ++n) CHECK(f[n] == brute[n]);
  }
}

TEST_CASE("f_{2,q} recurrence matches the oracle to 20000") {
  for (std::uint64_t q : {3, 5, 11}) {
    const auto rec = biq::tabulate_f2q(q, 20'000);
    const auto oracle = biq::count_distinct_representations({2, q}, 20'000);
    CHECK(rec.values().size() == oracle.values().size());
    CHECK(biq::first_mismatch(rec, oracle) == std::nullopt);
  }
}

TEST_CASE("m-ary recurrence") {
  const auto b2 = biq::tabulate_mary(2, 8);
  const std::vector<unsigned long> expect{1, 1, 2, 2, 4, 4, 6, 6, 10};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(b2[n] == expect[n]);
  for (std::uint64_t m : {3, 4, 7}) {
    CHECK(biq::first_mismatch(biq::tabulate_mary(m, 3000),
                              biq::count_mary_partitions_oracle(m, 3000)) == std::nullopt);
  }
  CHECK_THROWS_AS(biq::tabulate_mary(1, 5), std::invalid_argument);
}

TEST_CASE("g sequence") {
  const auto g3 = biq::tabulate_g(3, 7);
  CHECK(g3[0] == 0);
  const std::vector<unsigned long> expect{1, 2, 3, 5, 7, 9, 12};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(g3[n] == expect[n - 1]);
  CHECK(biq::tabulate_g(5, 2)[2] == 2);
  // g(n) is the value of f on the block [qn - q, qn - 1]
  const auto f5 = biq::tabulate_f2q(5, 500);
  const auto g5 = biq::tabulate_g(5, 100);
  for (std::size_t n = 1; n <= 100; ++n)
    for (std::size_t j = 1; j <= 5; ++j) CHECK(g5[n] == f5[5 * n - j]);
}

TEST_CASE("h sequence") {
  const auto h3 = biq::tabulate_h(3, 10);
  CHECK(h3[1] == 1);
  CHECK(h3[3] == 3);
  CHECK(h3[4] == mpq_class(5, 2));
  CHECK(h3[7] == 4);
  CHECK(h3[10] == mpq_class(23, 5));
  CHECK(h3.at(10).get_den() == 5);
  CHECK_THROWS_AS(h3.at(0), std::out_of_range);
  CHECK_THROWS_AS(h3.at(11), std::out_of_range);
  const auto h5 = biq::tabulate_h(5, 12);
  CHECK(h5[5] == 5);
  // 5 (1 - 1/h(2)) + 1
  CHECK(h5[6] == mpq_class(7, 2));
  CHECK_THROWS_AS(biq::tabulate_h(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(biq::tabulate_h(5, 4), std::invalid_argument);
}

TEST_CASE("g growth against h holds with equality at q = 3, n = 4") {
  const auto g = biq::tabulate_g(3, 4);
  const auto h = biq::tabulate_h(3, 4);
  // g(4) = 5, h(4) = 5/2, g(ceil(4/3)) = g(2) = 2
  CHECK(mpq_class(g[4]) == h[4] * mpq_class(g[2]));
}

TEST_CASE("recurrence preconditions") {
  CHECK_THROWS_AS(biq::tabulate_f2q(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(biq::tabulate_f2q(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(biq::tabulate_g(2, 10), std::invalid_argument);
}
