#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biq/count_table.hpp"
#include "biq/term_lattice.hpp"

namespace biq {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;
inline constexpr std::size_t kDefaultAntichainCap = 10'000;

// A set of distinct terms summing to target; when antichain is set no term
// divides another.
struct Representation {
  BasePair base;
  mpz_class target;
  std::vector<Term> terms;
  bool antichain = false;
};

enum class SearchStatus {
  found,
  exhausted,  // the search space was fully explored: no representation exists
  budget,     // node budget ran out first: inconclusive
};

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Representation> representation;
  std::uint64_t nodes = 0;
  // Antichain search on a base other than (2, 3), which is not d-complete.
  bool nonstandard_base = false;
};

// Distinct terms, all with value > min_term, summing to n. Depth-first over
// terms in descending order, pruning when the remaining suffix sum cannot
// cover the residual and memoizing residuals already shown unreachable.
SearchResult find_representation(const BasePair& base, const mpz_class& n,
                                 const mpz_class& min_term,
                                 std::uint64_t budget = kDefaultSearchBudget);

// Antichain variant: terms taken with alpha strictly increasing and beta
// strictly decreasing, which is exactly the no-divisibility condition.
SearchResult find_antichain_representation(const BasePair& base, const mpz_class& n,
                                           const mpz_class& min_term,
                                           std::uint64_t budget = kDefaultSearchBudget);

// Independent re-check of every Representation invariant. Returns a
// description of the first failure, or nullopt when valid.
std::optional<std::string> validate_representation(const Representation& rep,
                                                   const mpz_class& min_term);

// floor(c n / (log n)^(1 + eps)), the completion threshold shape.
mpz_class log_power_threshold(const mpz_class& n, double c, double eps);

struct ThresholdSweep {
  mpz_class n;
  mpz_class best_threshold;  // largest threshold with a representation above it
  std::optional<Representation> representation;
  std::size_t searches = 0;
  bool inconclusive = false;  // some probe hit the budget and was counted as infeasible
};

// Bisects over the term values below n for the largest threshold t such that
// n has a representation using only terms > t.
ThresholdSweep sweep_threshold(const BasePair& base, const mpz_class& n,
                               std::uint64_t budget = kDefaultSearchBudget);

// Number of antichain representations of each n <= n_max. Tabulated by a DP
// over alpha columns keyed on (sum, last beta).
CountTable count_antichain_representations(std::size_t n_max, const BasePair& base = {2, 3},
                                           std::size_t cap = kDefaultAntichainCap);

// Same counts by enumerating every subset of the terms <= n_max. Only for
// small n_max (at most 24 terms).
CountTable count_antichain_naive(std::size_t n_max, const BasePair& base = {2, 3});

// Largest n <= limit with no representation at all, from an oracle table.
std::optional<std::size_t> last_unrepresentable(const CountTable& f, std::size_t limit);

}  // namespace biq
