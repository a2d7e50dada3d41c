#include "biq/term_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace biq {

BasePair::BasePair(std::uint64_t p, std::uint64_t q) : p_(std::min(p, q)), q_(std::max(p, q)) {
  if (p_ < 2) throw std::invalid_argument("bases must be >= 2");
  if (std::gcd(p_, q_) != 1)
    throw std::invalid_argument("bases " + std::to_string(p_) + " and " + std::to_string(q_) +
                                " are not coprime");
}

TermGrid::TermGrid(BasePair base, mpz_class bound, std::vector<Term> terms)
    : base_(base), bound_(std::move(bound)), terms_(std::move(terms)) {}

std::size_t TermGrid::count_at_most(const mpz_class& x) const {
  auto it = std::upper_bound(terms_.begin(), terms_.end(), x,
                             [](const mpz_class& v, const Term& t) { return v < t.value; });
  return static_cast<std::size_t>(it - terms_.begin());
}

TermGrid enumerate_terms(const BasePair& base, const mpz_class& bound) {
  if (bound < 1) throw std::invalid_argument("enumerate_terms: bound must be >= 1");
  std::vector<Term> terms;
  mpz_class p_power = 1;
  for (unsigned alpha = 0; p_power <= bound; ++alpha, p_power *= base.p()) {
    mpz_class value = p_power;
    for (unsigned beta = 0; value <= bound; ++beta, value *= base.q())
      terms.push_back(Term{alpha, beta, value});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.value < b.value; });
  return TermGrid(base, bound, std::move(terms));
}

std::vector<std::uint64_t> term_values_u64(const BasePair& base, std::uint64_t bound) {
  std::vector<std::uint64_t> values;
  for (std::uint64_t a = 1;; a *= base.p()) {
    for (std::uint64_t v = a;; v *= base.q()) {
      values.push_back(v);
      if (v > bound / base.q()) break;
    }
    if (a > bound / base.p()) break;
  }
  std::sort(values.begin(), values.end());
  return values;
}

double grid_cardinality_estimate(const BasePair& base, const mpz_class& bound) {
  if (bound < 1) throw std::invalid_argument("grid_cardinality_estimate: bound must be >= 1");
  const double lb = log_of(bound);
  return lb * lb / (2.0 * std::log(static_cast<double>(base.p())) *
                    std::log(static_cast<double>(base.q())));
}

GridBandFit fit_grid_band(const BasePair& base, std::span<const mpz_class> samples) {
  GridBandFit fit;
  if (samples.empty()) return fit;
  const TermGrid grid = enumerate_terms(base, samples.back());
  std::size_t previous = 0;
  for (const auto& b : samples) {
    if (b < 2) throw std::invalid_argument("fit_grid_band: samples must be >= 2");
    const std::size_t exact = grid.count_at_most(b);
    if (exact < previous) fit.monotone = false;
    previous = exact;
    const double c =
        std::abs(static_cast<double>(exact) - grid_cardinality_estimate(base, b)) / log_of(b);
    if (c > fit.constant) {
      fit.constant = c;
      fit.worst_bound = b;
    }
  }
  return fit;
}

}  // namespace biq
