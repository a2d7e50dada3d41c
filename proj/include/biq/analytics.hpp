#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biq/count_table.hpp"
#include "biq/exec.hpp"
#include "biq/recurrence.hpp"
#include "biq/search.hpp"
#include "biq/term_lattice.hpp"

namespace biq {

// Outcome of one hard assertion. A failure carries the first counterexample.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> counterexample;
  std::string detail;
};

// ---- Bounds ---------------------------------------------------------------

struct UpperBoundReport {
  bool holds = true;
  std::optional<std::size_t> first_violation;
  std::size_t checked = 0;
  double max_exponent_ratio = 0.0;  // max over n of log2 f(n) / |E(n)|
  std::size_t worst_n = 0;
};

// f(n) <= 2^|E(n)| for every n in 1..n_max of the table.
UpperBoundReport check_upper_bound(const BasePair& base, const CountTable& table,
                                   Exec exec = Exec::parallel);
// Same, restricted to the given indices.
UpperBoundReport check_upper_bound(const BasePair& base, const CountTable& table,
                                   std::span<const std::size_t> points,
                                   Exec exec = Exec::parallel);

struct ExponentPoint {
  std::size_t n = 0;
  BigCount value;
  // log2 f(n) * 2 log p log q / (log n)^2; absent when f(n) = 0.
  std::optional<double> ratio;
  // (1 - ratio) log n / log log n: the implied constant of the error band.
  std::optional<double> band_constant;
};

std::vector<ExponentPoint> normalized_exponent_trace(const BasePair& base,
                                                     const CountTable& table,
                                                     std::span<const std::size_t> points);

// True when the defined ratios increase along the trace.
bool trace_increasing(std::span<const ExponentPoint> trace);

struct ProbeSample {
  std::vector<std::size_t> subset;  // indices into the small-term set
  mpz_class subset_sum;
  mpz_class remainder;              // n minus the subset sum
  bool remainder_above_half = false;
  bool disjoint_bound_ok = false;   // subset sum < n / (log n)^2
  SearchStatus status = SearchStatus::exhausted;
  std::uint64_t nodes = 0;
  std::vector<Term> completion;
  bool valid = false;               // combined expression re-validated
};

struct LowerBoundProbeReport {
  BasePair base{2, 3};
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  double small_exponent = 4.0;
  double completion_exponent = 1.5;
  std::uint64_t small_bound = 0;        // floor(n / (log n)^small_exponent)
  std::vector<Term> small_terms;        // the set E~
  std::uint64_t completion_threshold = 0;  // floor(n / (log n)^completion_exponent)
  double disjoint_limit = 0.0;          // n / (log n)^2
  std::vector<ProbeSample> samples;
  std::size_t successes = 0;
  std::size_t budget_hits = 0;
};

// Draws random subsets S of the small terms, completes n - sum(S) with terms
// above the completion threshold and checks the union is a valid expression.
// Subsets are drawn one bit per small term from mt19937_64(seed).
LowerBoundProbeReport lower_bound_probe(const BasePair& base, std::uint64_t n,
                                                 std::size_t samples, std::uint64_t seed,
                                                 double small_exponent = 4.0,
                                                 double completion_exponent = 1.5,
                                                 std::uint64_t budget = kDefaultSearchBudget,
                                                 Exec exec = Exec::parallel);

// ---- p = 2 statistics ----------------------------------------------------

struct ParityReport {
  std::uint64_t q = 0;
  std::size_t x = 0;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  double even_density = 0.0;
  double even_floor = 0.0;  // 1/(2q) - 1/(2q^2)
  bool floor_holds = false;
  double half_gap = 0.0;    // |even_density - 1/2|
  std::optional<double> odd_growth_exponent;  // log((q-1)/2) / log q, q >= 5
  std::optional<double> odd_growth_ratio;     // odd_count / x^exponent
};

ParityReport parity_scan(const CountTable& f2q, std::size_t x, Exec exec = Exec::parallel);

struct EqualityDensityReport {
  std::uint64_t q = 0;
  std::size_t x = 0;
  std::size_t count = 0;     // #{1 <= n <= x : f(n+1) = f(n)}
  std::size_t expected = 0;  // x - floor((x+1)/q)
  bool identity_holds = false;
  double density = 0.0;
  double limit = 0.0;        // (q-1)/q
};

EqualityDensityReport equality_density(const CountTable& f2q, std::size_t x);

struct RatioReport {
  std::uint64_t q = 0;
  std::size_t start = 0;
  std::size_t length = 0;
  ExactRational max_ratio;
  ExactRational min_ratio;
  std::size_t argmax = 0;
  std::size_t bound_checks = 0;
  std::size_t bound_violations = 0;
};

// f(n+1)/f(n) over n in [start, start + length]. When h is given, every n in
// the window with n + 1 = qk is also checked against h(k+1)/(h(k+1) - 1).
RatioReport ratio_window(const CountTable& f, const HSequence* h, std::size_t start,
                         std::size_t length);

std::vector<RatioReport> ratio_convergence(
    const CountTable& f, const HSequence* h,
    std::span<const std::pair<std::size_t, std::size_t>> windows, Exec exec = Exec::parallel);

// f(qk)/f(qk-1) <= h(k+1)/(h(k+1) - 1) for every 1 <= k <= k_max.
CheckResult check_ratio_bound(const CountTable& f2q, const HSequence& h, std::size_t k_max,
                              Exec exec = Exec::parallel);

struct SignScanReport {
  TableBase base;
  std::size_t limit = 0;
  std::size_t increases = 0;
  std::size_t decreases = 0;
  std::size_t ties = 0;
  std::optional<std::size_t> first_increase_n;
  std::optional<std::size_t> first_decrease_n;
};

// Compares f(n+1) with f(n) for n = 1..limit-1.
SignScanReport sign_change_scan(const CountTable& table, std::size_t limit);

struct ScalingPoint {
  std::size_t n = 0;
  BigCount value;
  BigCount scaled_value;              // f(ell n)
  std::optional<double> exponent;     // log(f(ell n)/f(n)) / log n
};

struct ScalingReport {
  TableBase base;
  std::uint64_t ell = 0;
  double conjectured_exponent = 0.0;  // log 2 log ell / (log p log q)
  std::vector<ScalingPoint> points;
};

ScalingReport scaling_ratio_scan(const BasePair& base, const CountTable& table,
                                 std::uint64_t ell, std::span<const std::size_t> points);

struct BaseComparison {
  std::uint64_t q_small = 0;
  std::uint64_t q_large = 0;
  bool dominates = true;  // f_{2,q_small}(n) >= f_{2,q_large}(n) for all n >= 1
  std::optional<std::size_t> first_violation;
  std::optional<std::size_t> last_equal_n;
  double final_ratio = 0.0;  // f_{2,q_large}(N) / f_{2,q_small}(N)
};

BaseComparison compare_bases(const CountTable& small_q, const CountTable& large_q);

// ---- Exact identities ----------------------------------------------------

CheckResult check_equal_tables(std::string name, const CountTable& a, const CountTable& b);
CheckResult check_monotone(const CountTable& f, Exec exec = Exec::parallel);
// f(qm + r) = 1 + f(1) + ... + f(m) for m >= 1, 0 <= r < q.
CheckResult check_prefix_sum_identity(const CountTable& f2q, Exec exec = Exec::parallel);
// g(n) = f(qn - j) for 1 <= j <= q and 2 <= n <= f.n_max / q.
CheckResult check_g_consistency(const CountTable& g, const CountTable& f2q);
// h(n) >= floor(log n / log q).
CheckResult check_h_log_floor(const HSequence& h, Exec exec = Exec::parallel);
// g(n) >= h(n) g(ceil(n/q)).
CheckResult check_g_h_growth(const CountTable& g, const HSequence& h, Exec exec = Exec::parallel);
CheckResult check_equality_identity(const CountTable& f2q, std::size_t x);
// Zero-threshold search finds a representation exactly when f(n) >= 1.
CheckResult check_search_completeness(const BasePair& base, const CountTable& oracle,
                                      std::size_t limit, Exec exec = Exec::parallel);

// Every hard assertion available for the base up to nmax. For p = 2 with odd q
// this covers oracle and recurrence agreement, the prefix-sum identity,
// monotonicity, domination by q + 2, the upper bound, the g/h inequalities, the
// ratio bound and the equality identity. Other bases get the oracle-only checks.
std::vector<CheckResult> run_invariant_suite(const BasePair& base, std::size_t nmax,
                                             Exec exec = Exec::parallel);

}  // namespace biq
