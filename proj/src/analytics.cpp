#include "biq/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "biq/exact_counter.hpp"

namespace biq {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Smallest n in [lo, hi] for which fails(n) holds, or kNone.
template <class Fails>
std::size_t first_failure(std::size_t lo, std::size_t hi, Exec exec, Fails fails) {
  if (hi < lo) return kNone;
  if (exec == Exec::serial) {
    for (std::size_t n = lo; n <= hi; ++n)
      if (fails(n)) return n;
    return kNone;
  }
  std::size_t first = kNone;
  const auto begin = static_cast<std::int64_t>(lo);
  const auto end = static_cast<std::int64_t>(hi);
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t i = begin; i <= end; ++i) {
    const auto n = static_cast<std::size_t>(i);
    if (n < first && fails(n)) first = n;
  }
  return first;
}

CheckResult make_check(std::string name, std::size_t first, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.passed = first == kNone;
  if (!r.passed) r.counterexample = first;
  r.detail = std::move(detail);
  return r;
}

void require_range(const CountTable& t, std::size_t n, const char* what) {
  if (t.n_max() < n)
    throw std::out_of_range(std::string(what) + ": table covers n <= " +
                            std::to_string(t.n_max()) + ", need " + std::to_string(n));
}

std::uint64_t binary_q(const CountTable& f2q, const char* what) {
  if (f2q.kind() != TableKind::f_pq || f2q.base().p != 2 || f2q.base().q % 2 == 0)
    throw std::invalid_argument(std::string(what) + " needs an f_{2,q} table with odd q");
  return f2q.base().q;
}

double ln(double x) { return std::log(x); }

}  // namespace

// ---- Bounds ---------------------------------------------------------------

UpperBoundReport check_upper_bound(const BasePair& base, const CountTable& table,
                                   std::span<const std::size_t> points, Exec exec) {
  UpperBoundReport report;
  if (points.empty()) return report;
  const std::size_t top = *std::max_element(points.begin(), points.end());
  require_range(table, top, "check_upper_bound");
  const TermGrid grid = enumerate_terms(base, std::max<std::size_t>(top, 1));
  std::vector<mpz_class> pow2(grid.size() + 1);
  for (std::size_t k = 0; k < pow2.size(); ++k) mpz_setbit(pow2[k].get_mpz_t(), k);

  std::vector<double> ratio(points.size(), 0.0);
  const std::size_t bad = first_failure(0, points.size() - 1, exec, [&](std::size_t i) {
    const std::size_t n = points[i];
    if (n == 0) return false;
    const std::size_t k = grid.count_at_most(n);
    const BigCount& f = table[n];
    if (sgn(f) > 0) ratio[i] = log2_of(f) / static_cast<double>(k);
    return f > pow2[k];
  });
  report.checked = points.size();
  if (bad != kNone) {
    report.holds = false;
    report.first_violation = points[bad];
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    if (ratio[i] > report.max_exponent_ratio) {
      report.max_exponent_ratio = ratio[i];
      report.worst_n = points[i];
    }
  return report;
}

UpperBoundReport check_upper_bound(const BasePair& base, const CountTable& table, Exec exec) {
  std::vector<std::size_t> points(table.n_max());
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = i + 1;
  return check_upper_bound(base, table, points, exec);
}

std::vector<ExponentPoint> normalized_exponent_trace(const BasePair& base,
                                                     const CountTable& table,
                                                     std::span<const std::size_t> points) {
  const double scale = 2.0 * ln(static_cast<double>(base.p())) * ln(static_cast<double>(base.q()));
  std::vector<ExponentPoint> trace;
  for (std::size_t n : points) {
    if (n < 2) throw std::invalid_argument("exponent trace: sample points must be >= 2");
    require_range(table, n, "normalized_exponent_trace");
    ExponentPoint pt;
    pt.n = n;
    pt.value = table[n];
    if (sgn(pt.value) > 0) {
      const double lnn = ln(static_cast<double>(n));
      pt.ratio = log2_of(pt.value) * scale / (lnn * lnn);
      if (lnn > 1.0) pt.band_constant = (1.0 - *pt.ratio) * lnn / ln(lnn);
    }
    trace.push_back(std::move(pt));
  }
  return trace;
}

bool trace_increasing(std::span<const ExponentPoint> trace) {
  std::optional<double> prev;
  for (const auto& pt : trace) {
    if (!pt.ratio) continue;
    if (prev && *pt.ratio <= *prev) return false;
    prev = pt.ratio;
  }
  return true;
}

LowerBoundProbeReport lower_bound_probe(const BasePair& base, std::uint64_t n,
                                                 std::size_t samples, std::uint64_t seed,
                                                 double small_exponent,
                                                 double completion_exponent,
                                                 std::uint64_t budget, Exec exec) {
  if (n < 3) throw std::invalid_argument("lower-bound probe: n must be >= 3");
  LowerBoundProbeReport report;
  report.base = base;
  report.n = n;
  report.seed = seed;
  report.small_exponent = small_exponent;
  report.completion_exponent = completion_exponent;

  const long double nn = static_cast<long double>(n);
  const long double lnn = std::log(nn);
  report.small_bound = static_cast<std::uint64_t>(std::floor(nn / std::pow(lnn, small_exponent)));
  if (report.small_bound < 1)
    throw std::invalid_argument("lower-bound probe: n / (log n)^" +
                                std::to_string(small_exponent) + " < 1, the small-term set is empty");
  report.completion_threshold =
      static_cast<std::uint64_t>(std::floor(nn / std::pow(lnn, completion_exponent)));
  report.disjoint_limit = static_cast<double>(nn / (lnn * lnn));
  const TermGrid small = enumerate_terms(base, report.small_bound);
  report.small_terms.assign(small.terms().begin(), small.terms().end());

  std::mt19937_64 rng(seed);
  report.samples.resize(samples);
  for (auto& s : report.samples)
    for (std::size_t i = 0; i < report.small_terms.size(); ++i)
      if (rng() & 1) s.subset.push_back(i);

  const mpz_class target(static_cast<unsigned long>(n));
  auto run_sample = [&](ProbeSample& s) {
    s.subset_sum = 0;
    for (std::size_t i : s.subset) s.subset_sum += report.small_terms[i].value;
    s.remainder = target - s.subset_sum;
    s.remainder_above_half = 2 * s.remainder > target;
    s.disjoint_bound_ok = static_cast<long double>(s.subset_sum.get_d()) <
                          nn / (lnn * lnn);
    if (s.remainder < 1) return;
    const mpz_class threshold =
        std::min(mpz_class(static_cast<unsigned long>(report.completion_threshold)), s.remainder);
    const SearchResult r = find_representation(base, s.remainder, threshold, budget);
    s.status = r.status;
    s.nodes = r.nodes;
    if (!r.representation) return;
    s.completion = r.representation->terms;
    Representation combined{base, target, {}, false};
    for (std::size_t i : s.subset) combined.terms.push_back(report.small_terms[i]);
    combined.terms.insert(combined.terms.end(), s.completion.begin(), s.completion.end());
    s.valid = !validate_representation(combined, 0).has_value();
  };

  const auto count = static_cast<std::int64_t>(samples);
  if (exec == Exec::serial) {
    for (auto& s : report.samples) run_sample(s);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) run_sample(report.samples[i]);
  }
  for (const auto& s : report.samples) {
    if (s.valid && s.disjoint_bound_ok && s.remainder_above_half) ++report.successes;
    if (s.status == SearchStatus::budget) ++report.budget_hits;
  }
  return report;
}

// ---- p = 2 statistics ----------------------------------------------------

ParityReport parity_scan(const CountTable& f2q, std::size_t x, Exec exec) {
  ParityReport r;
  r.q = binary_q(f2q, "parity_scan");
  if (x < 1) throw std::invalid_argument("parity_scan: x must be >= 1");
  require_range(f2q, x, "parity_scan");
  r.x = x;
  std::size_t even = 0;
  if (exec == Exec::serial) {
    for (std::size_t n = 1; n <= x; ++n) even += mpz_even_p(f2q[n].get_mpz_t()) ? 1 : 0;
  } else {
    const auto end = static_cast<std::int64_t>(x);
#pragma omp parallel for schedule(static) reduction(+ : even)
    for (std::int64_t n = 1; n <= end; ++n) even += mpz_even_p(f2q[n].get_mpz_t()) ? 1 : 0;
  }
  r.even_count = even;
  r.odd_count = x - even;
  const double q = static_cast<double>(r.q);
  r.even_density = static_cast<double>(even) / static_cast<double>(x);
  r.even_floor = 1.0 / (2.0 * q) - 1.0 / (2.0 * q * q);
  // exact form of even/x >= (q - 1)/(2q^2)
  r.floor_holds = mpz_class(static_cast<unsigned long>(even)) * 2 * r.q * r.q >=
                  mpz_class(static_cast<unsigned long>(x)) * (r.q - 1);
  r.half_gap = std::abs(r.even_density - 0.5);
  if (r.q >= 5) {
    r.odd_growth_exponent = ln((q - 1.0) / 2.0) / ln(q);
    r.odd_growth_ratio =
        static_cast<double>(r.odd_count) / std::pow(static_cast<double>(x), *r.odd_growth_exponent);
  }
  return r;
}

EqualityDensityReport equality_density(const CountTable& f2q, std::size_t x) {
  EqualityDensityReport r;
  r.q = binary_q(f2q, "equality_density");
  require_range(f2q, x + 1, "equality_density");
  r.x = x;
  for (std::size_t n = 1; n <= x; ++n)
    if (f2q[n + 1] == f2q[n]) ++r.count;
  r.expected = x - (x + 1) / r.q;
  r.identity_holds = r.count == r.expected;
  r.density = x ? static_cast<double>(r.count) / static_cast<double>(x) : 0.0;
  r.limit = static_cast<double>(r.q - 1) / static_cast<double>(r.q);
  return r;
}

RatioReport ratio_window(const CountTable& f, const HSequence* h, std::size_t start,
                         std::size_t length) {
  if (start < 1) throw std::invalid_argument("ratio_window: start must be >= 1");
  require_range(f, start + length + 1, "ratio_window");
  RatioReport r;
  r.q = f.base().q;
  r.start = start;
  r.length = length;
  for (std::size_t n = start; n <= start + length; ++n) {
    if (sgn(f[n]) == 0) throw std::domain_error("ratio_window: f(n) = 0");
    ExactRational ratio(f[n + 1], f[n]);
    ratio.canonicalize();
    if (n == start || ratio > r.max_ratio) {
      r.max_ratio = ratio;
      r.argmax = n;
    }
    if (n == start || ratio < r.min_ratio) r.min_ratio = ratio;
    if (h && (n + 1) % r.q == 0) {
      const std::size_t k = (n + 1) / r.q;
      const ExactRational& hk = h->at(k + 1);
      ++r.bound_checks;
      if (hk <= 1 || ratio > hk / (hk - 1)) ++r.bound_violations;
    }
  }
  return r;
}

std::vector<RatioReport> ratio_convergence(
    const CountTable& f, const HSequence* h,
    std::span<const std::pair<std::size_t, std::size_t>> windows, Exec exec) {
  std::vector<RatioReport> out(windows.size());
  const auto count = static_cast<std::int64_t>(windows.size());
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < count; ++i)
      out[i] = ratio_window(f, h, windows[i].first, windows[i].second);
  } else {
    // exceptions must not escape the parallel region
    std::vector<std::string> errors(windows.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        out[i] = ratio_window(f, h, windows[i].first, windows[i].second);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
    for (const auto& e : errors)
      if (!e.empty()) throw std::runtime_error(e);
  }
  return out;
}

CheckResult check_ratio_bound(const CountTable& f2q, const HSequence& h, std::size_t k_max,
                              Exec exec) {
  const std::uint64_t q = binary_q(f2q, "check_ratio_bound");
  require_range(f2q, q * k_max, "check_ratio_bound");
  if (h.n_max() < k_max + 1) throw std::out_of_range("check_ratio_bound: h table too short");
  const std::size_t bad = first_failure(1, k_max, exec, [&](std::size_t k) {
    const ExactRational& hk = h[k + 1];
    const mpz_class& a = hk.get_num();
    const mpz_class& b = hk.get_den();
    if (a <= b) return true;
    // f(qk) / f(qk - 1) <= a / (a - b)
    return f2q[q * k] * (a - b) > a * f2q[q * k - 1];
  });
  return make_check("ratio_bound", bad,
                    "f(qk)/f(qk-1) <= h(k+1)/(h(k+1)-1) for k <= " + std::to_string(k_max));
}

SignScanReport sign_change_scan(const CountTable& table, std::size_t limit) {
  if (limit < 2) throw std::invalid_argument("sign_change_scan: limit must be >= 2");
  require_range(table, limit, "sign_change_scan");
  SignScanReport r;
  r.base = table.base();
  r.limit = limit;
  for (std::size_t n = 1; n < limit; ++n) {
    const int c = cmp(table[n + 1], table[n]);
    if (c > 0) {
      ++r.increases;
      if (!r.first_increase_n) r.first_increase_n = n;
    } else if (c < 0) {
      ++r.decreases;
      if (!r.first_decrease_n) r.first_decrease_n = n;
    } else {
      ++r.ties;
    }
  }
  return r;
}

ScalingReport scaling_ratio_scan(const BasePair& base, const CountTable& table,
                                 std::uint64_t ell, std::span<const std::size_t> points) {
  if (ell < 2) throw std::invalid_argument("scaling scan: ell must be >= 2");
  ScalingReport r;
  r.base = table.base();
  r.ell = ell;
  r.conjectured_exponent = ln(2.0) * ln(static_cast<double>(ell)) /
                           (ln(static_cast<double>(base.p())) * ln(static_cast<double>(base.q())));
  for (std::size_t n : points) {
    require_range(table, ell * n, "scaling_ratio_scan");
    ScalingPoint pt;
    pt.n = n;
    pt.value = table[n];
    pt.scaled_value = table[ell * n];
    if (n >= 2 && sgn(pt.value) > 0 && sgn(pt.scaled_value) > 0)
      pt.exponent = (log_of(pt.scaled_value) - log_of(pt.value)) / ln(static_cast<double>(n));
    r.points.push_back(std::move(pt));
  }
  return r;
}

BaseComparison compare_bases(const CountTable& small_q, const CountTable& large_q) {
  BaseComparison c;
  c.q_small = binary_q(small_q, "compare_bases");
  c.q_large = binary_q(large_q, "compare_bases");
  if (c.q_small >= c.q_large) throw std::invalid_argument("compare_bases: need q_small < q_large");
  const std::size_t N = std::min(small_q.n_max(), large_q.n_max());
  for (std::size_t n = 1; n <= N; ++n) {
    const int cmpv = cmp(small_q[n], large_q[n]);
    if (cmpv < 0 && c.dominates) {
      c.dominates = false;
      c.first_violation = n;
    }
    if (cmpv == 0) c.last_equal_n = n;
  }
  ExactRational ratio(large_q[N], small_q[N]);
  ratio.canonicalize();
  c.final_ratio = ratio.get_d();
  return c;
}

// ---- Exact identities ----------------------------------------------------

CheckResult check_equal_tables(std::string name, const CountTable& a, const CountTable& b) {
  const auto m = first_mismatch(a, b);
  return make_check(std::move(name), m ? *m : kNone,
                    std::string(to_string(a.producer())) + " " + std::string(to_string(a.kind())) +
                        " vs " + std::string(to_string(b.producer())) + " " +
                        std::string(to_string(b.kind())) + " up to " +
                        std::to_string(std::min(a.n_max(), b.n_max())));
}

CheckResult check_monotone(const CountTable& f, Exec exec) {
  const std::size_t bad = first_failure(1, f.n_max() - 1, exec,
                                        [&](std::size_t n) { return f[n + 1] < f[n]; });
  return make_check("monotone", bad, "f(n+1) >= f(n)");
}

CheckResult check_prefix_sum_identity(const CountTable& f2q, Exec exec) {
  const std::uint64_t q = binary_q(f2q, "check_prefix_sum_identity");
  const std::size_t N = f2q.n_max();
  std::vector<BigCount> prefix(N / q + 1, 0);
  for (std::size_t m = 1; m < prefix.size(); ++m) prefix[m] = prefix[m - 1] + f2q[m];
  const std::size_t bad = first_failure(q, N, exec, [&](std::size_t n) {
    return f2q[n] != prefix[n / q] + 1;
  });
  return make_check("prefix_sum_identity", bad, "f(qm+r) = 1 + f(1) + ... + f(m)");
}

CheckResult check_g_consistency(const CountTable& g, const CountTable& f2q) {
  const std::uint64_t q = binary_q(f2q, "check_g_consistency");
  std::size_t bad = kNone;
  if (g.n_max() >= 1)
    for (std::size_t j = 1; j < q && j <= f2q.n_max() && bad == kNone; ++j)
      if (f2q[j] != g[1]) bad = 1;
  const std::size_t top = std::min(g.n_max(), f2q.n_max() / q);
  for (std::size_t n = 2; n <= top && bad == kNone; ++n)
    for (std::size_t j = 1; j <= q; ++j)
      if (g[n] != f2q[q * n - j]) {
        bad = n;
        break;
      }
  return make_check("g_consistency", bad, "g(n) = f(qn-1) = ... = f(qn-q)");
}

CheckResult check_h_log_floor(const HSequence& h, Exec exec) {
  const std::uint64_t q = h.q();
  const std::size_t bad = first_failure(1, h.n_max(), exec, [&](std::size_t n) {
    return cmp(h[n], static_cast<unsigned long>(floor_log(std::uint64_t{n}, q))) < 0;
  });
  return make_check("h_log_floor", bad, "h(n) >= floor(log n / log q)");
}

CheckResult check_g_h_growth(const CountTable& g, const HSequence& h, Exec exec) {
  const std::uint64_t q = h.q();
  const std::size_t top = std::min(g.n_max(), h.n_max());
  const std::size_t bad = first_failure(1, top, exec, [&](std::size_t n) {
    const ExactRational& hn = h[n];
    return g[n] * hn.get_den() < hn.get_num() * g[ceil_div(n, q)];
  });
  return make_check("g_h_growth", bad, "g(n) >= h(n) g(ceil(n/q))");
}

CheckResult check_equality_identity(const CountTable& f2q, std::size_t x) {
  const auto r = equality_density(f2q, x);
  return make_check("equality_identity", r.identity_holds ? kNone : x,
                    "#{n <= " + std::to_string(x) + " : f(n+1) = f(n)} = " +
                        std::to_string(r.count) + ", expected " + std::to_string(r.expected));
}

CheckResult check_search_completeness(const BasePair& base, const CountTable& oracle,
                                      std::size_t limit, Exec exec) {
  require_range(oracle, limit, "check_search_completeness");
  const std::size_t bad = first_failure(1, limit, exec, [&](std::size_t n) {
    const mpz_class target(static_cast<unsigned long>(n));
    const SearchResult r = find_representation(base, target, 0);
    if (r.status == SearchStatus::budget) return true;
    const bool found = r.status == SearchStatus::found;
    if (found && validate_representation(*r.representation, 0)) return true;
    return found != (sgn(oracle[n]) > 0);
  });
  return make_check("search_completeness", bad,
                    "zero-threshold search succeeds iff f(n) >= 1, n <= " + std::to_string(limit));
}

std::vector<CheckResult> run_invariant_suite(const BasePair& base, std::size_t nmax, Exec exec) {
  if (nmax < 2) throw std::invalid_argument("invariant suite: nmax must be >= 2");
  std::vector<CheckResult> out;
  const std::size_t search_limit = std::min<std::size_t>(nmax, 2000);

  auto upper = [&](const CountTable& t) {
    const auto r = check_upper_bound(base, t, exec);
    return make_check("upper_bound", r.first_violation ? *r.first_violation : kNone,
                      "f(n) <= 2^|E(n)|, max log2 f/|E| = " + std::to_string(r.max_exponent_ratio));
  };

  if (!base.has_binary_fast_path()) {
    const CountTable oracle = count_distinct_representations(base, nmax, exec);
    auto order = term_values_u64(base, nmax);
    std::reverse(order.begin(), order.end());
    out.push_back(check_equal_tables("order_insensitivity", oracle,
                                     count_distinct_representations_ordered(base, nmax, order)));
    out.push_back(upper(oracle));
    out.push_back(check_search_completeness(base, oracle, search_limit, exec));
    return out;
  }

  const std::uint64_t q = base.q();
  const CountTable f = tabulate_f2q(q, nmax);
  if (nmax <= kDefaultOracleCap) {
    out.push_back(check_equal_tables("oracle_vs_recurrence",
                                     count_distinct_representations(base, nmax, exec), f));
    out.push_back(check_equal_tables("partition_oracle",
                                     count_mary_partitions_oracle(q, nmax, exec), f));
  }
  out.push_back(check_equal_tables("mary_recurrence", tabulate_mary(q, nmax), f));
  out.push_back(check_monotone(f, exec));
  out.push_back(check_prefix_sum_identity(f, exec));
  {
    const auto c = compare_bases(f, tabulate_f2q(q + 2, nmax));
    out.push_back(make_check("domination_q+2", c.first_violation ? *c.first_violation : kNone,
                             "f_{2," + std::to_string(q) + "} >= f_{2," + std::to_string(q + 2) + "}"));
  }
  out.push_back(upper(f));
  const CountTable g = tabulate_g(q, nmax);
  out.push_back(check_g_consistency(g, f));
  if (nmax >= q) {
    const HSequence h = tabulate_h(q, nmax);
    out.push_back(check_h_log_floor(h, exec));
    out.push_back(check_g_h_growth(g, h, exec));
    out.push_back(check_ratio_bound(f, h, nmax / q, exec));
  }
  out.push_back(check_equality_identity(f, nmax - 1));
  out.push_back(check_search_completeness(base, f, search_limit, exec));
  return out;
}

}  // namespace biq
