#include <doctest.h>

#include <algorithm>

#include "biq/exact_counter.hpp"
#include "biq/search.hpp"
#include "brute.hpp"

using biq::SearchStatus;

namespace {
std::vector<unsigned long> sorted_values(const biq::Representation& rep) {
  std::vector<unsigned long> v;
  for (const auto& t : rep.terms) v.push_back(t.value.get_ui());
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("threshold search finds valid representations") {
  const auto r = biq::find_representation({2, 3}, 100, 10);
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.representation);
  CHECK(biq::validate_representation(*r.representation, 10) == std::nullopt);
  for (const auto& t : r.representation->terms) CHECK(t.value > 10);

  const auto big = biq::find_representation({2, 3}, mpz_class("1000000000000"), 1000);
  REQUIRE(big.status == SearchStatus::found);
  CHECK(biq::validate_representation(*big.representation, 1000) == std::nullopt);
}

TEST_CASE("search proves absence") {
  CHECK(biq::find_representation({2, 3}, 1, 1).status == SearchStatus::exhausted);
  CHECK(biq::find_representation({3, 4}, 6, 0).status == SearchStatus::exhausted);
  CHECK(biq::find_representation({3, 4}, 2, 0).status == SearchStatus::exhausted);
  const auto ok = biq::find_representation({3, 4}, 13, 0);
  CHECK(ok.status == SearchStatus::found);
}

TEST_CASE("budget exhaustion is reported as inconclusive") {
  const auto r = biq::find_representation({5, 7}, mpz_class("123456789012345"), 0, 3);
  CHECK(r.status != SearchStatus::found);
  if (r.status == SearchStatus::budget) CHECK(r.nodes >= 3);
}

TEST_CASE("validation rejects broken representations") {
  auto r = biq::find_representation({2, 3}, 100, 10);
  REQUIRE(r.representation);
  auto rep = *r.representation;
  CHECK(biq::validate_representation(rep, 50).has_value());
  auto dup = rep;
  dup.terms.push_back(dup.terms.front());
  CHECK(biq::validate_representation(dup, 0).has_value());
  auto off = rep;
  off.target += 1;
  CHECK(biq::validate_representation(off, 0).has_value());
  auto bad = rep;
  bad.terms.front().value += 1;
  CHECK(biq::validate_representation(bad, 0).has_value());
}

TEST_CASE("search agrees with the oracle on representability") {
  for (auto base : {biq::BasePair(2, 3), biq::BasePair(2, 5), biq::BasePair(3, 4)}) {
    const auto f = biq::count_distinct_representations(base, 2000);
    for (std::size_t n = 1; n <= 2000; ++n) {
      const auto r = biq::find_representation(base, n, 0);
      REQUIRE(r.status != SearchStatus::budget);
      CHECK((r.status == SearchStatus::found) == (f[n] > 0));
    }
  }
}

TEST_CASE("antichain search") {
  const auto seven = biq::find_antichain_representation({2, 3}, 7, 0);
  REQUIRE(seven.representation);
  CHECK(sorted_values(*seven.representation) == std::vector<unsigned long>{3, 4});
  CHECK(seven.representation->antichain);
  const auto twelve = biq::find_antichain_representation({2, 3}, 12, 0);
  REQUIRE(twelve.status == SearchStatus::found);
  CHECK(biq::validate_representation(*twelve.representation, 0) == std::nullopt);
  const auto five = biq::find_antichain_representation({2, 3}, 5, 0);
  REQUIRE(five.representation);
  CHECK(sorted_values(*five.representation) == std::vector<unsigned long>{2, 3});
  CHECK(biq::find_antichain_representation({3, 4}, 13, 0).nonstandard_base);
  for (std::uint64_t n = 2; n <= 500; ++n) {
    const auto r = biq::find_antichain_representation({2, 3}, n, 0);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(biq::validate_representation(*r.representation, 0) == std::nullopt);
  }
}

TEST_CASE("antichain counts match subset enumeration") {
  const auto dp = biq::count_antichain_representations(60);
  const auto naive = biq::count_antichain_naive(60);
  const auto brute = brute::antichain_counts(2, 3, 60);
  for (std::size_t n = 0; n <= 60; ++n) {
    CHECK(dp[n] == brute[n]);
    CHECK(naive[n] == brute[n]);
  }
  CHECK(dp[7] == 1);
  CHECK(dp[5] == 1);
  CHECK(dp[2] == 1);
  const auto dp34 = biq::count_antichain_representations(80, {3, 4});
  const auto brute34 = brute::antichain_counts(3, 4, 80);
  for (std::size_t n = 0; n <= 80; ++n) CHECK(dp34[n] == brute34[n]);
  CHECK_THROWS_AS(biq::count_antichain_representations(10'001), std::length_error);
}

TEST_CASE("threshold sweep and log-power threshold") {
  const auto s = biq::sweep_threshold({2, 3}, 100);
  REQUIRE(s.representation);
  CHECK(biq::validate_representation(*s.representation, s.best_threshold) == std::nullopt);
  // no representation exists above the next larger term value
  const auto terms = biq::term_values_u64({2, 3}, 100);
  const auto next = std::upper_bound(terms.begin(), terms.end(), s.best_threshold.get_ui());
  if (next != terms.end() && *next < 100)
    CHECK(biq::find_representation({2, 3}, 100, *next).status == SearchStatus::exhausted);
  CHECK(biq::log_power_threshold(1'000'000, 1.0, 0.5) > 0);
  CHECK(biq::log_power_threshold(1'000'000, 1.0, 0.5) < 1'000'000 / 13);
}

TEST_CASE("last unrepresentable value") {
  const auto f34 = biq::count_distinct_representations({3, 4}, 5000);
  CHECK(biq::last_unrepresentable(f34, 5000) == std::optional<std::size_t>{54});
  const auto f23 = biq::count_distinct_representations({2, 3}, 100);
  CHECK(biq::last_unrepresentable(f23, 100) == std::nullopt);
}
