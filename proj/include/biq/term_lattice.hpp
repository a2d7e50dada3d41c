#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "biq/bignum.hpp"

namespace biq {

// A coprime pair of bases with p < q. Constructing from (q, p) swaps them.
class BasePair {
 public:
  BasePair(std::uint64_t p, std::uint64_t q);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }

  // p = 2 with odd q: the case covered by the fast recurrences.
  bool has_binary_fast_path() const { return p_ == 2 && q_ % 2 == 1; }

  friend bool operator==(const BasePair&, const BasePair&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t q_;
};

// The lattice point (alpha, beta) with value p^alpha q^beta.
struct Term {
  unsigned alpha = 0;
  unsigned beta = 0;
  mpz_class value;

  // Distinct exponent pairs give distinct values since gcd(p, q) = 1.
  friend bool operator==(const Term& a, const Term& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }
};

// All terms p^alpha q^beta <= bound, strictly increasing by value.
class TermGrid {
 public:
  TermGrid(BasePair base, mpz_class bound, std::vector<Term> terms);

  const BasePair& base() const { return base_; }
  const mpz_class& bound() const { return bound_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  // Number of terms with value <= x, i.e. |E(x)| for x <= bound().
  std::size_t count_at_most(const mpz_class& x) const;

 private:
  BasePair base_;
  mpz_class bound_;
  std::vector<Term> terms_;
};

TermGrid enumerate_terms(const BasePair& base, const mpz_class& bound);

// Term values <= bound as machine words; bound must fit in 64 bits.
std::vector<std::uint64_t> term_values_u64(const BasePair& base, std::uint64_t bound);

// (log B)^2 / (2 log p log q): the leading term of |E(B)|.
double grid_cardinality_estimate(const BasePair& base, const mpz_class& bound);

struct GridBandFit {
  double constant = 0.0;        // max over samples of |exact - estimate| / log B
  mpz_class worst_bound;        // the sample attaining it
  bool monotone = true;         // exact count nondecreasing along the samples
};

// Empirical constant C of the O(log B) band |E(B)| = estimate +- C log B.
// Samples must be >= 2 and ascending.
GridBandFit fit_grid_band(const BasePair& base, std::span<const mpz_class> samples);

}  // namespace biq
