#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "biq/count_table.hpp"

namespace biq {

// Plain-text table file:
//   # biq-table v1
//   kind=<kind> p=<p> q=<q> n_max=<N> producer=<producer>
//   ---
// followed by N + 1 decimal lines for indices 0..N.
void write_table(std::ostream& out, const CountTable& table);

// Throws std::runtime_error on malformed input.
CountTable read_table(std::istream& in);

struct TableKey {
  TableKind kind;
  TableBase base;
  std::size_t n_max;
  Producer producer;
  friend bool operator==(const TableKey&, const TableKey&) = default;
};

TableKey key_of(const CountTable& table);

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  // $BIQ_CACHE_DIR, or ./.biq-cache
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const TableKey& key) const;

  // A missing, unreadable or mismatched file is a miss.
  std::optional<CountTable> load(const TableKey& key) const;
  void store(const CountTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace biq
