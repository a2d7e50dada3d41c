#include "biq/experiments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "biq/analytics.hpp"
#include "biq/exact_counter.hpp"
#include "biq/recurrence.hpp"

namespace biq {
namespace {

std::string u(std::uint64_t v) { return std::to_string(v); }
std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : ""; }
std::string yes(bool b) { return b ? "true" : "false"; }

std::string join_values(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ' ';
    out += t.value.get_str(10);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> decade_points(std::size_t limit) {
  std::vector<std::size_t> pts;
  std::size_t p = 10;
  for (; p <= limit; p *= 10) {
    pts.push_back(p);
    if (p > limit / 10) break;
  }
  if (pts.empty() || pts.back() != limit) pts.push_back(limit);
  return pts;
}

TableProvider::TableProvider(std::optional<TableCache> cache, std::size_t oracle_cap)
    : cache_(std::move(cache)), oracle_cap_(oracle_cap) {}

CountTable TableProvider::f_table(const BasePair& base, std::size_t n_max, bool force_oracle) {
  const bool recurrence = base.has_binary_fast_path() && !force_oracle;
  const TableKey key{TableKind::f_pq, {base.p(), base.q()}, n_max,
                     recurrence ? Producer::recurrence : Producer::oracle_dp};
  if (cache_)
    if (auto t = cache_->load(key)) {
      ++hits_;
      return *t;
    }
  CountTable t = recurrence ? tabulate_f2q(base.q(), n_max)
                            : count_distinct_representations(base, n_max, Exec::parallel, oracle_cap_);
  if (cache_) cache_->store(t);
  return t;
}

CountTable TableProvider::mary_table(std::uint64_t m, std::size_t n_max) {
  const TableKey key{TableKind::b_m, {0, m}, n_max, Producer::recurrence};
  if (cache_)
    if (auto t = cache_->load(key)) {
      ++hits_;
      return *t;
    }
  CountTable t = tabulate_mary(m, n_max);
  if (cache_) cache_->store(t);
  return t;
}

CountTable TableProvider::g_table(std::uint64_t q, std::size_t n_max) {
  const TableKey key{TableKind::g_seq, {2, q}, n_max, Producer::recurrence};
  if (cache_)
    if (auto t = cache_->load(key)) {
      ++hits_;
      return *t;
    }
  CountTable t = tabulate_g(q, n_max);
  if (cache_) cache_->store(t);
  return t;
}

ExperimentOutput run_parity(TableProvider& tables, std::uint64_t q, std::size_t x) {
  ExperimentOutput out;
  out.name = "parity";
  out.parameters = {{"q", q}, {"x", x}};
  const CountTable f = tables.f_table(BasePair(2, q), x);
  out.csv.header = {"q", "x", "even_count", "odd_count", "even_density", "even_floor",
                    "floor_holds", "half_gap", "odd_growth_exponent", "odd_growth_ratio"};
  for (std::size_t pt : decade_points(x)) {
    const ParityReport r = parity_scan(f, pt);
    out.csv.add_row({u(q), u(pt), u(r.even_count), u(r.odd_count), format_real(r.even_density),
                     format_real(r.even_floor), yes(r.floor_holds), format_real(r.half_gap),
                     format_real(r.odd_growth_exponent), format_real(r.odd_growth_ratio)});
    if (pt == x)
      out.summary.push_back("q=" + u(q) + " x=" + u(x) + " even_density=" +
                            format_real(r.even_density) + " floor=" + format_real(r.even_floor) +
                            (r.floor_holds ? " (holds)" : " (BELOW FLOOR)") +
                            " |density-1/2|=" + format_real(r.half_gap));
  }
  return out;
}

ExperimentOutput run_ratio(TableProvider& tables, std::uint64_t q,
                           const std::vector<std::pair<std::size_t, std::size_t>>& windows) {
  ExperimentOutput out;
  out.name = "ratio";
  out.parameters = {{"q", q}};
  out.parameters["windows"] = nlohmann::json::array();
  std::size_t top = 2;
  for (const auto& [s, l] : windows) {
    out.parameters["windows"].push_back({s, l});
    top = std::max(top, s + l + 1);
  }
  const CountTable f = tables.f_table(BasePair(2, q), top);
  const HSequence h = tabulate_h(q, std::max<std::size_t>(top / q + 2, q));
  const auto reports = ratio_convergence(f, &h, windows);
  out.csv.header = {"q", "start", "length", "max_ratio", "max_ratio_real", "argmax",
                    "min_ratio", "bound_checks", "bound_violations"};
  for (const auto& r : reports) {
    out.csv.add_row({u(q), u(r.start), u(r.length), to_decimal(r.max_ratio),
                     format_real(r.max_ratio.get_d()), u(r.argmax), to_decimal(r.min_ratio),
                     u(r.bound_checks), u(r.bound_violations)});
    if (r.bound_violations) out.passed = false;
  }
  out.summary.push_back(std::to_string(reports.size()) + " windows, derived-bound violations: " +
                        (out.passed ? "0" : "SOME"));
  return out;
}

ExperimentOutput run_signs(TableProvider& tables, const BasePair& base, std::size_t limit) {
  ExperimentOutput out;
  out.name = "signs";
  out.parameters = {{"p", base.p()}, {"q", base.q()}, {"limit", limit}};
  const CountTable f = tables.f_table(base, limit);
  out.csv.header = {"p", "q", "limit", "increases", "decreases", "ties", "first_increase_n",
                    "first_decrease_n"};
  for (std::size_t pt : decade_points(limit)) {
    const SignScanReport r = sign_change_scan(f, pt);
    out.csv.add_row({u(base.p()), u(base.q()), u(pt), u(r.increases), u(r.decreases), u(r.ties),
                     opt(r.first_increase_n), opt(r.first_decrease_n)});
    if (pt == limit)
      out.summary.push_back("increases=" + u(r.increases) + " decreases=" + u(r.decreases) +
                            " ties=" + u(r.ties) + " first_increase_n=" + opt(r.first_increase_n) +
                            " first_decrease_n=" + opt(r.first_decrease_n));
  }
  return out;
}

ExperimentOutput run_scaling(TableProvider& tables, const BasePair& base, std::uint64_t ell,
                             const std::vector<std::size_t>& points) {
  ExperimentOutput out;
  out.name = "scaling";
  out.parameters = {{"p", base.p()}, {"q", base.q()}, {"ell", ell}, {"points", points}};
  std::size_t top = 1;
  for (std::size_t n : points) top = std::max(top, n * ell);
  const CountTable f = tables.f_table(base, top);
  const ScalingReport r = scaling_ratio_scan(base, f, ell, points);
  out.csv.header = {"p", "q", "ell", "n", "f_n", "f_ell_n", "empirical_exponent",
                    "conjectured_exponent"};
  for (const auto& pt : r.points)
    out.csv.add_row({u(base.p()), u(base.q()), u(ell), u(pt.n), to_decimal(pt.value),
                     to_decimal(pt.scaled_value), format_real(pt.exponent),
                     format_real(r.conjectured_exponent)});
  out.summary.push_back("conjectured exponent " + format_real(r.conjectured_exponent));
  return out;
}

ExperimentOutput run_asymptotic(TableProvider& tables, const BasePair& base,
                                const std::vector<std::size_t>& points) {
  ExperimentOutput out;
  out.name = "asymptotic";
  out.parameters = {{"p", base.p()}, {"q", base.q()}, {"points", points}};
  std::size_t top = 2;
  for (std::size_t n : points) top = std::max(top, n);
  const CountTable f = tables.f_table(base, top);
  const auto trace = normalized_exponent_trace(base, f, points);
  const TermGrid grid = enumerate_terms(base, top);
  out.csv.header = {"p", "q", "n", "f_n", "grid_size", "grid_estimate", "ratio", "band_constant"};
  for (const auto& pt : trace) {
    const mpz_class n(static_cast<unsigned long>(pt.n));
    out.csv.add_row({u(base.p()), u(base.q()), u(pt.n), to_decimal(pt.value),
                     u(grid.count_at_most(n)), format_real(grid_cardinality_estimate(base, n)),
                     format_real(pt.ratio), format_real(pt.band_constant)});
  }
  out.summary.push_back(std::string("normalized exponent ") +
                        (trace_increasing(trace) ? "increasing" : "not monotone") +
                        " along the sample");
  return out;
}

ExperimentOutput run_lower_bound_probe(const BasePair& base, std::uint64_t n,
                                       std::size_t samples, std::uint64_t seed,
                                       double small_exponent, double completion_exponent,
                                       std::uint64_t budget) {
  ExperimentOutput out;
  out.name = "lower_bound_probe";
  out.seed = seed;
  out.parameters = {{"p", base.p()},
                    {"q", base.q()},
                    {"n", n},
                    {"samples", samples},
                    {"small_exponent", small_exponent},
                    {"completion_exponent", completion_exponent},
                    {"budget", budget}};
  const auto r = lower_bound_probe(base, n, samples, seed, small_exponent,
                                            completion_exponent, budget);
  out.csv.header = {"sample", "subset_terms", "subset_sum", "remainder", "remainder_above_half",
                    "disjoint_ok", "status", "nodes", "completion_terms", "valid"};
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    const auto& s = r.samples[i];
    std::vector<Term> subset;
    for (std::size_t j : s.subset) subset.push_back(r.small_terms[j]);
    out.csv.add_row({u(i), join_values(subset), to_decimal(s.subset_sum), to_decimal(s.remainder),
                     yes(s.remainder_above_half), yes(s.disjoint_bound_ok),
                     std::string(to_string(s.status)), u(s.nodes), join_values(s.completion),
                     yes(s.valid)});
  }
  out.summary.push_back("small terms " + u(r.small_terms.size()) + " (<= " + u(r.small_bound) +
                        "), completion threshold " + u(r.completion_threshold) + ", valid " +
                        u(r.successes) + "/" + u(samples) + ", budget hits " + u(r.budget_hits));
  out.passed = r.successes == samples;
  return out;
}

ExperimentOutput run_birch(TableProvider& tables, const BasePair& base, std::size_t limit) {
  ExperimentOutput out;
  out.name = "birch";
  out.parameters = {{"p", base.p()}, {"q", base.q()}, {"limit", limit}};
  const CountTable f = tables.f_table(base, limit, true);
  const auto last_zero = last_unrepresentable(f, limit);
  out.csv.header = {"p", "q", "n", "f_n", "search_status", "terms"};
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= limit; ++n) {
    const SearchResult r = find_representation(base, mpz_class(static_cast<unsigned long>(n)), 0);
    const bool agrees = (r.status == SearchStatus::found) == (sgn(f[n]) > 0) &&
                        (!r.representation || !validate_representation(*r.representation, 0));
    if (!agrees) ++mismatches;
    out.csv.add_row({u(base.p()), u(base.q()), u(n), to_decimal(f[n]),
                     std::string(to_string(r.status)),
                     r.representation ? join_values(r.representation->terms) : ""});
  }
  out.passed = mismatches == 0;
  out.summary.push_back("last unrepresentable n <= " + u(limit) + ": " +
                        (last_zero ? u(*last_zero) : std::string("none")) +
                        ", search/oracle mismatches: " + u(mismatches));
  return out;
}

ExperimentOutput run_antichain(TableProvider& tables, std::size_t n_max, std::size_t naive_limit) {
  ExperimentOutput out;
  out.name = "antichain";
  out.parameters = {{"n_max", n_max}, {"naive_limit", naive_limit}};
  const BasePair base(2, 3);
  const CountTable d = count_antichain_representations(n_max, base);
  const CountTable f = tables.f_table(base, n_max);
  const std::size_t naive_top = std::min(naive_limit, n_max);
  const std::optional<CountTable> naive =
      naive_top >= 1 ? std::optional(count_antichain_naive(naive_top, base)) : std::nullopt;
  out.csv.header = {"n", "antichain_count", "naive_count", "f_n", "within_unrestricted"};
  std::size_t naive_mismatch = 0, above = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::string naive_cell;
    if (naive && n <= naive_top) {
      naive_cell = to_decimal((*naive)[n]);
      if ((*naive)[n] != d[n]) ++naive_mismatch;
    }
    const bool within = d[n] <= f[n];
    if (!within) ++above;
    out.csv.add_row({u(n), to_decimal(d[n]), naive_cell, to_decimal(f[n]), yes(within)});
  }
  out.passed = naive_mismatch == 0 && above == 0;
  out.summary.push_back("naive cross-check to " + u(naive_top) + ": " +
                        (naive_mismatch ? "MISMATCH" : std::string("match")) +
                        ", antichain count above f(n): " + u(above));
  return out;
}

ExperimentOutput run_threshold_sweep(const BasePair& base, const std::vector<std::uint64_t>& ns,
                                     std::uint64_t budget) {
  ExperimentOutput out;
  out.name = "threshold_sweep";
  out.parameters = {{"p", base.p()}, {"q", base.q()}, {"n", ns}, {"budget", budget}};
  out.csv.header = {"n", "best_threshold", "threshold_over_n", "reference_n_over_log2",
                    "searches", "inconclusive", "terms"};
  for (std::uint64_t n : ns) {
    const mpz_class target(static_cast<unsigned long>(n));
    const ThresholdSweep s = sweep_threshold(base, target, budget);
    const double lnn = std::log(static_cast<double>(n));
    out.csv.add_row({u(n), s.representation ? to_decimal(s.best_threshold) : "",
                     s.representation ? format_real(s.best_threshold.get_d() / static_cast<double>(n)) : "",
                     format_real(static_cast<double>(n) / (lnn * lnn)), u(s.searches),
                     yes(s.inconclusive),
                     s.representation ? join_values(s.representation->terms) : ""});
    out.summary.push_back("n=" + u(n) + " best threshold " +
                          (s.representation ? to_decimal(s.best_threshold) : std::string("none")));
  }
  return out;
}

}  // namespace biq
