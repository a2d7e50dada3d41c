#include <doctest.h>

#include <cmath>

#include "biq/analytics.hpp"
#include "biq/exact_counter.hpp"
#include "biq/recurrence.hpp"

using biq::Exec;

TEST_CASE("parity scan") {
  const auto f = biq::tabulate_f2q(3, 100);
  const auto r = biq::parity_scan(f, 9);
  // f(1..9) = 1 1 2 2 2 3 3 3 5
  CHECK(r.even_count == 3);
  CHECK(r.odd_count == 6);
  CHECK(r.even_floor == doctest::Approx(1.0 / 6 - 1.0 / 18));
  CHECK(r.floor_holds);
  CHECK_FALSE(r.odd_growth_exponent);
  const auto r5 = biq::parity_scan(biq::tabulate_f2q(5, 10'000), 10'000);
  REQUIRE(r5.odd_growth_exponent);
  CHECK(*r5.odd_growth_exponent == doctest::Approx(std::log(2.0) / std::log(5.0)));
  CHECK(biq::parity_scan(f, 100, Exec::serial).even_count ==
        biq::parity_scan(f, 100, Exec::parallel).even_count);
}

TEST_CASE("equality density identity") {
  const auto f = biq::tabulate_f2q(3, 100);
  const auto r = biq::equality_density(f, 9);
  CHECK(r.count == 6);
  CHECK(r.expected == 6);
  CHECK(r.identity_holds);
  const auto small = biq::equality_density(f, 2);
  CHECK(small.count == 1);
  CHECK(small.identity_holds);
  for (std::uint64_t q : {3, 5, 7, 13}) {
    const auto g = biq::tabulate_f2q(q, 20'001);
    const auto e = biq::equality_density(g, 20'000);
    CHECK(e.identity_holds);
    CHECK(e.limit == doctest::Approx(double(q - 1) / q));
  }
}

TEST_CASE("ratio windows") {
  const auto f = biq::tabulate_f2q(3, 10);
  const auto h3 = biq::tabulate_h(3, 10);
  // f(9)/f(8) = 5/3 meets h(4)/(h(4) - 1) exactly
  const auto r = biq::ratio_window(f, &h3, 8, 0);
  CHECK(r.max_ratio == mpq_class(5, 3));
  CHECK(r.argmax == 8);
  CHECK(r.bound_checks == 1);
  CHECK(r.bound_violations == 0);
  const auto flat = biq::ratio_window(f, nullptr, 3, 1);
  CHECK(flat.max_ratio == 1);
  CHECK(flat.min_ratio == 1);
  const auto big = biq::tabulate_f2q(3, 200'001);
  const auto h = biq::tabulate_h(3, 100'000);
  const auto w = biq::ratio_window(big, &h, 100'000, 1'000);
  CHECK(w.bound_checks > 0);
  CHECK(w.bound_violations == 0);
  CHECK(w.max_ratio > 1);
  CHECK(w.max_ratio < mpq_class(11, 10));
  CHECK(biq::check_ratio_bound(big, h, 60'000).passed);
}

TEST_CASE("sign-change scan") {
  const auto f34 = biq::count_distinct_representations({3, 4}, 1000);
  const auto s = biq::sign_change_scan(f34, 1000);
  CHECK(s.first_decrease_n == std::optional<std::size_t>{1});
  CHECK(s.first_increase_n == std::optional<std::size_t>{2});
  CHECK(s.increases + s.decreases + s.ties == 999);
  const auto tiny = biq::sign_change_scan(f34, 2);
  CHECK(tiny.increases + tiny.decreases + tiny.ties == 1);
  const auto f23 = biq::tabulate_f2q(3, 1000);
  CHECK(biq::sign_change_scan(f23, 1000).decreases == 0);
}

TEST_CASE("scaling scan and asymptotic trace") {
  const biq::BasePair base(2, 3);
  const auto f = biq::tabulate_f2q(3, 300'000);
  const std::vector<std::size_t> points{1000, 10'000, 100'000};
  const auto s = biq::scaling_ratio_scan(base, f, 2, points);
  CHECK(s.conjectured_exponent == doctest::Approx(0.6309).epsilon(1e-4));
  REQUIRE(s.points.size() == 3);
  for (const auto& p : s.points) CHECK(p.exponent);
  const auto trace = biq::normalized_exponent_trace(base, f, points);
  CHECK(biq::trace_increasing(trace));
  for (const auto& t : trace) CHECK(*t.ratio < 1.0);
}

TEST_CASE("upper bound check") {
  const biq::BasePair base(2, 3);
  const auto f = biq::tabulate_f2q(3, 10);
  const auto r = biq::check_upper_bound(base, f);
  CHECK(r.holds);
  CHECK(r.checked == 10);
  // a table forced over the bound is caught at its first index
  std::vector<mpz_class> vals(f.values().begin(), f.values().end());
  vals[4] = 1000;
  const biq::CountTable broken(biq::TableKind::f_pq, {2, 3}, biq::Producer::oracle_dp, vals);
  for (Exec exec : {Exec::serial, Exec::parallel}) {
    const auto b = biq::check_upper_bound(base, broken, exec);
    CHECK_FALSE(b.holds);
    CHECK(b.first_violation == std::optional<std::size_t>{4});
  }
}

TEST_CASE("identity checks report the first counterexample") {
  const auto f = biq::tabulate_f2q(5, 5000);
  CHECK(biq::check_monotone(f).passed);
  CHECK(biq::check_prefix_sum_identity(f).passed);
  CHECK(biq::check_g_consistency(biq::tabulate_g(5, 1000), f).passed);
  const auto h = biq::tabulate_h(5, 5000);
  CHECK(biq::check_h_log_floor(h).passed);
  CHECK(biq::check_g_h_growth(biq::tabulate_g(5, 5000), h).passed);
  std::vector<mpz_class> vals(f.values().begin(), f.values().end());
  vals[701] -= 1;
  vals[901] -= 1;
  const biq::CountTable broken(biq::TableKind::f_pq, {2, 5}, biq::Producer::oracle_dp, vals);
  for (Exec exec : {Exec::serial, Exec::parallel}) {
    const auto m = biq::check_monotone(broken, exec);
    CHECK_FALSE(m.passed);
    CHECK(m.counterexample == std::optional<std::size_t>{700});
  }
}

TEST_CASE("base comparison") {
  const auto c = biq::compare_bases(biq::tabulate_f2q(3, 10'000), biq::tabulate_f2q(5, 10'000));
  CHECK(c.dominates);
  CHECK(c.final_ratio < 1.0);
}

TEST_CASE("invariant suite") {
  for (auto base : {biq::BasePair(2, 3), biq::BasePair(2, 7), biq::BasePair(3, 4)}) {
    const auto serial = biq::run_invariant_suite(base, 3000, Exec::serial);
    const auto parallel = biq::run_invariant_suite(base, 3000, Exec::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK_MESSAGE(serial[i].passed, serial[i].name, ": ", serial[i].detail);
      CHECK(serial[i].passed == parallel[i].passed);
    }
  }
}

TEST_CASE("lower-bound probe") {
  const auto r = biq::lower_bound_probe({2, 3}, 1'000'000ull, 20, 42);
  CHECK(r.samples.size() == 20);
  CHECK(r.successes + r.budget_hits <= 20);
  for (const auto& s : r.samples) {
    if (s.status == biq::SearchStatus::found) CHECK(s.valid);
    CHECK(mpz_class(s.subset_sum + s.remainder) == 1'000'000ul);
  }
  const auto again = biq::lower_bound_probe({2, 3}, 1'000'000ull, 20, 42);
  for (std::size_t i = 0; i < r.samples.size(); ++i)
    CHECK(r.samples[i].subset == again.samples[i].subset);
}
