#include "biq/search.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace biq {
namespace {

constexpr std::size_t kMemoCap = std::size_t{1} << 21;

struct MemoKey {
  std::size_t index;
  unsigned bound;
  mpz_class residual;
  bool operator==(const MemoKey& o) const {
    return index == o.index && bound == o.bound && residual == o.residual;
  }
};

struct MemoHash {
  std::size_t operator()(const MemoKey& k) const {
    std::size_t h = std::hash<std::size_t>{}(k.index * 1315423911u + k.bound);
    const mpz_srcptr z = k.residual.get_mpz_t();
    const mp_limb_t* limbs = mpz_limbs_read(z);
    for (std::size_t i = 0; i < mpz_size(z); ++i)
      h ^= std::hash<mp_limb_t>{}(limbs[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

using FailureMemo = std::unordered_set<MemoKey, MemoHash>;

void remember(FailureMemo& memo, MemoKey key) {
  if (memo.size() < kMemoCap) memo.insert(std::move(key));
}

class DistinctSearch {
 public:
  DistinctSearch(std::vector<Term> descending, std::uint64_t budget)
      : terms_(std::move(descending)), suffix_(terms_.size() + 1, 0), budget_(budget) {
    for (std::size_t i = terms_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + terms_[i].value;
  }

  SearchStatus run(const mpz_class& target) {
    if (dfs(0, target)) return SearchStatus::found;
    return out_of_budget_ ? SearchStatus::budget : SearchStatus::exhausted;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::vector<Term> chosen() const {
    std::vector<Term> out;
    for (std::size_t i : chosen_) out.push_back(terms_[i]);
    return out;
  }

 private:
  bool dfs(std::size_t i, const mpz_class& residual) {
    if (residual == 0) return true;
    // skip terms that overshoot
    i = static_cast<std::size_t>(
        std::partition_point(terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end(),
                             [&](const Term& t) { return t.value > residual; }) -
        terms_.begin());
    if (i == terms_.size() || suffix_[i] < residual) return false;
    MemoKey key{i, 0, residual};
    if (memo_.contains(key)) return false;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    chosen_.push_back(i);
    if (dfs(i + 1, residual - terms_[i].value)) return true;
    chosen_.pop_back();
    if (out_of_budget_) return false;
    if (dfs(i + 1, residual)) return true;
    if (!out_of_budget_) remember(memo_, std::move(key));
    return false;
  }

  std::vector<Term> terms_;
  std::vector<mpz_class> suffix_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::size_t> chosen_;
  FailureMemo memo_;
};

constexpr unsigned kNoBeta = UINT_MAX;

// Columns indexed by alpha; each holds the admissible terms of that alpha by beta.
class AntichainSearch {
 public:
  AntichainSearch(std::vector<std::vector<Term>> columns, std::uint64_t budget)
      : columns_(std::move(columns)), budget_(budget) {}

  SearchStatus run(const mpz_class& target) {
    if (dfs(0, kNoBeta, target)) return SearchStatus::found;
    return out_of_budget_ ? SearchStatus::budget : SearchStatus::exhausted;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Term>& chosen() const { return chosen_; }

 private:
  // Sum of the largest admissible value per remaining column with beta < bound.
  mpz_class reach(std::size_t col, unsigned bound) const {
    mpz_class total = 0;
    for (std::size_t a = col; a < columns_.size(); ++a) {
      const auto& c = columns_[a];
      for (auto it = c.rbegin(); it != c.rend(); ++it)
        if (it->beta < bound) {
          total += it->value;
          break;
        }
    }
    return total;
  }

  bool dfs(std::size_t col, unsigned bound, const mpz_class& residual) {
    if (residual == 0) return true;
    if (col == columns_.size() || reach(col, bound) < residual) return false;
    MemoKey key{col, bound, residual};
    if (memo_.contains(key)) return false;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    const auto& c = columns_[col];
    // largest beta first: columns are stored ascending in beta
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      if (it->beta >= bound || it->value > residual) continue;
      chosen_.push_back(*it);
      if (dfs(col + 1, it->beta, residual - it->value)) return true;
      chosen_.pop_back();
      if (out_of_budget_) return false;
    }
    if (dfs(col + 1, bound, residual)) return true;
    if (!out_of_budget_) remember(memo_, std::move(key));
    return false;
  }

  std::vector<std::vector<Term>> columns_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<Term> chosen_;
  FailureMemo memo_;
};

void check_target(const mpz_class& n, const mpz_class& min_term) {
  if (n < 1) throw std::invalid_argument("search target must be >= 1");
  if (min_term < 0 || min_term > n)
    throw std::invalid_argument("search threshold must lie in [0, n]");
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::budget: return "budget";
  }
  return "?";
}

SearchResult find_representation(const BasePair& base, const mpz_class& n,
                                 const mpz_class& min_term, std::uint64_t budget) {
  check_target(n, min_term);
  const TermGrid grid = enumerate_terms(base, n);
  std::vector<Term> terms;
  for (auto it = grid.terms().rbegin(); it != grid.terms().rend() && it->value > min_term; ++it)
    terms.push_back(*it);

  DistinctSearch search(std::move(terms), budget);
  SearchResult result;
  result.status = search.run(n);
  result.nodes = search.nodes();
  if (result.status == SearchStatus::found)
    result.representation = Representation{base, n, search.chosen(), false};
  return result;
}

SearchResult find_antichain_representation(const BasePair& base, const mpz_class& n,
                                           const mpz_class& min_term, std::uint64_t budget) {
  if (n < 2) throw std::invalid_argument("antichain search target must be >= 2");
  check_target(n, min_term);
  const TermGrid grid = enumerate_terms(base, n);
  unsigned max_alpha = 0;
  for (const auto& t : grid.terms()) max_alpha = std::max(max_alpha, t.alpha);
  std::vector<std::vector<Term>> columns(max_alpha + 1);
  for (const auto& t : grid.terms())
    if (t.value > min_term) columns[t.alpha].push_back(t);
  for (auto& c : columns)
    std::sort(c.begin(), c.end(), [](const Term& a, const Term& b) { return a.beta < b.beta; });

  AntichainSearch search(std::move(columns), budget);
  SearchResult result;
  result.status = search.run(n);
  result.nodes = search.nodes();
  result.nonstandard_base = !(base == BasePair(2, 3));
  if (result.status == SearchStatus::found)
    result.representation = Representation{base, n, search.chosen(), true};
  return result;
}

std::optional<std::string> validate_representation(const Representation& rep,
                                                   const mpz_class& min_term) {
  mpz_class sum = 0;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    const Term& t = rep.terms[i];
    mpz_class expect;
    mpz_class qpow;
    mpz_ui_pow_ui(expect.get_mpz_t(), rep.base.p(), t.alpha);
    mpz_ui_pow_ui(qpow.get_mpz_t(), rep.base.q(), t.beta);
    expect *= qpow;
    if (expect != t.value) return "term value does not match its exponents";
    if (t.value <= min_term) return "term " + to_decimal(t.value) + " is not above the threshold";
    sum += t.value;
    for (std::size_t j = 0; j < i; ++j) {
      const Term& u = rep.terms[j];
      if (u == t) return "repeated term " + to_decimal(t.value);
      if (rep.antichain && ((u.alpha <= t.alpha && u.beta <= t.beta) ||
                            (t.alpha <= u.alpha && t.beta <= u.beta)))
        return "divisibility between " + to_decimal(u.value) + " and " + to_decimal(t.value);
    }
  }
  if (sum != rep.target) return "terms sum to " + to_decimal(sum) + ", not " + to_decimal(rep.target);
  return std::nullopt;
}

mpz_class log_power_threshold(const mpz_class& n, double c, double eps) {
  if (n < 2) return 0;
  const double scale = c / std::pow(log_of(n), 1.0 + eps);
  mpf_class x(n, 256);
  x *= scale;
  mpz_class out(floor(x));
  return out < 0 ? mpz_class(0) : out;
}

ThresholdSweep sweep_threshold(const BasePair& base, const mpz_class& n, std::uint64_t budget) {
  check_target(n, 0);
  ThresholdSweep sweep;
  sweep.n = n;
  std::vector<mpz_class> candidates{0};
  const TermGrid grid = enumerate_terms(base, n);
  for (const auto& t : grid.terms())
    if (t.value < n) candidates.push_back(t.value);

  auto feasible = [&](std::size_t i) -> std::optional<Representation> {
    ++sweep.searches;
    SearchResult r = find_representation(base, n, candidates[i], budget);
    if (r.status == SearchStatus::budget) sweep.inconclusive = true;
    return r.representation;
  };

  auto rep = feasible(0);
  if (!rep) return sweep;
  std::size_t lo = 0, hi = candidates.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto r = feasible(mid)) {
      lo = mid;
      rep = std::move(r);
    } else {
      hi = mid;
    }
  }
  sweep.best_threshold = candidates[lo];
  sweep.representation = std::move(rep);
  return sweep;
}

CountTable count_antichain_representations(std::size_t n_max, const BasePair& base,
                                           std::size_t cap) {
  if (n_max < 1) throw std::invalid_argument("antichain count: n_max must be >= 1");
  if (n_max > cap)
    throw std::length_error("antichain count: n_max " + std::to_string(n_max) +
                            " exceeds cap " + std::to_string(cap));
  const TermGrid grid = enumerate_terms(base, n_max);
  unsigned max_alpha = 0, max_beta = 0;
  for (const auto& t : grid.terms()) {
    max_alpha = std::max(max_alpha, t.alpha);
    max_beta = std::max(max_beta, t.beta);
  }
  // dp[s][sum]: s = 0 means nothing chosen yet, s = b + 1 means the last chosen beta is b.
  std::vector<std::vector<BigCount>> dp(max_beta + 2, std::vector<BigCount>(n_max + 1, 0));
  dp[0][0] = 1;
  for (unsigned alpha = 0; alpha <= max_alpha; ++alpha) {
    std::vector<std::uint64_t> column(max_beta + 1, 0);
    for (const auto& t : grid.terms())
      if (t.alpha == alpha) column[t.beta] = t.value.get_ui();
    auto next = dp;
    // admissible predecessors for beta: nothing chosen, or last beta > beta
    std::vector<BigCount> admissible = dp[0];
    for (unsigned beta = max_beta + 1; beta-- > 0;) {
      if (const std::uint64_t v = column[beta]; v != 0)
        for (std::size_t s = 0; s + v <= n_max; ++s)
          if (sgn(admissible[s]) != 0) next[beta + 1][s + v] += admissible[s];
      for (std::size_t s = 0; s <= n_max; ++s) admissible[s] += dp[beta + 1][s];
    }
    dp = std::move(next);
  }
  std::vector<BigCount> counts(n_max + 1, 0);
  for (const auto& row : dp)
    for (std::size_t s = 0; s <= n_max; ++s) counts[s] += row[s];
  return CountTable(TableKind::d_pq, {base.p(), base.q()}, Producer::oracle_dp,
                    std::move(counts));
}

CountTable count_antichain_naive(std::size_t n_max, const BasePair& base) {
  const TermGrid grid = enumerate_terms(base, n_max);
  if (grid.size() > 24) throw std::length_error("naive antichain enumeration: too many terms");
  std::vector<BigCount> counts(n_max + 1, 0);
  const auto terms = grid.terms();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << terms.size()); ++mask) {
    std::uint64_t sum = 0;
    bool ok = true;
    for (std::size_t i = 0; ok && i < terms.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      sum += terms[i].value.get_ui();
      for (std::size_t j = 0; j < i; ++j)
        if ((mask >> j & 1) && mpz_divisible_p(terms[i].value.get_mpz_t(),
                                               terms[j].value.get_mpz_t()))
          ok = false;
    }
    if (ok && sum <= n_max) counts[sum] += 1;
  }
  return CountTable(TableKind::d_pq, {base.p(), base.q()}, Producer::oracle_dp,
                    std::move(counts));
}

std::optional<std::size_t> last_unrepresentable(const CountTable& f, std::size_t limit) {
  for (std::size_t n = std::min(limit, f.n_max()); n >= 1; --n)
    if (sgn(f[n]) == 0) return n;
  return std::nullopt;
}

}  // namespace biq
