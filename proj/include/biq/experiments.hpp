#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "biq/count_table.hpp"
#include "biq/report_io.hpp"
#include "biq/search.hpp"
#include "biq/table_cache.hpp"
#include "biq/term_lattice.hpp"

namespace biq {

// Builds tables on demand, going through the cache when one is attached.
class TableProvider {
 public:
  explicit TableProvider(std::optional<TableCache> cache = std::nullopt,
                         std::size_t oracle_cap = 100'000);

  // f_{p,q} up to n_max: the recurrence for p = 2 with odd q unless
  // force_oracle, otherwise the subset-sum oracle.
  CountTable f_table(const BasePair& base, std::size_t n_max, bool force_oracle = false);
  CountTable mary_table(std::uint64_t m, std::size_t n_max);
  CountTable g_table(std::uint64_t q, std::size_t n_max);

  std::size_t cache_hits() const { return hits_; }

 private:
  std::optional<TableCache> cache_;
  std::size_t oracle_cap_;
  std::size_t hits_ = 0;
};

struct ExperimentOutput {
  std::string name;
  CsvDocument csv;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> summary;
  // False when a hard check embedded in the experiment failed.
  bool passed = true;
};

// Rows at x = 10, 100, ... below x, then x itself.
ExperimentOutput run_parity(TableProvider& tables, std::uint64_t q, std::size_t x);

ExperimentOutput run_ratio(TableProvider& tables, std::uint64_t q,
                           const std::vector<std::pair<std::size_t, std::size_t>>& windows);

ExperimentOutput run_signs(TableProvider& tables, const BasePair& base, std::size_t limit);

ExperimentOutput run_scaling(TableProvider& tables, const BasePair& base, std::uint64_t ell,
                             const std::vector<std::size_t>& points);

ExperimentOutput run_asymptotic(TableProvider& tables, const BasePair& base,
                                const std::vector<std::size_t>& points);

ExperimentOutput run_lower_bound_probe(const BasePair& base, std::uint64_t n,
                                       std::size_t samples, std::uint64_t seed,
                                       double small_exponent, double completion_exponent,
                                       std::uint64_t budget);

ExperimentOutput run_birch(TableProvider& tables, const BasePair& base, std::size_t limit);

ExperimentOutput run_antichain(TableProvider& tables, std::size_t n_max,
                               std::size_t naive_limit = 60);

ExperimentOutput run_threshold_sweep(const BasePair& base, const std::vector<std::uint64_t>& ns,
                                     std::uint64_t budget);

// Sample points 10^k (k >= 1) not exceeding limit, plus limit when it is not a power of ten.
std::vector<std::size_t> decade_points(std::size_t limit);

}  // namespace biq
