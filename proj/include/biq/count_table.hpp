#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biq/bignum.hpp"

namespace biq {

// f_pq: f_{p,q}(n); b_m: m-ary partitions; g_seq: the block sequence g(n);
// d_pq: representations whose terms form a divisibility antichain.
enum class TableKind { f_pq, b_m, g_seq, d_pq };
enum class Producer { oracle_dp, recurrence };

std::string_view to_string(TableKind kind);
std::string_view to_string(Producer producer);
std::optional<TableKind> parse_table_kind(std::string_view s);
std::optional<Producer> parse_producer(std::string_view s);

// Base descriptor as written in table headers. For b_m tables p is 0 and q is m.
struct TableBase {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  friend bool operator==(const TableBase&, const TableBase&) = default;
};

// Immutable tabulation n -> value for n = 0..n_max.
class CountTable {
 public:
  CountTable(TableKind kind, TableBase base, Producer producer, std::vector<BigCount> values);

  TableKind kind() const { return kind_; }
  const TableBase& base() const { return base_; }
  Producer producer() const { return producer_; }
  std::size_t n_max() const { return values_.size() - 1; }
  std::span<const BigCount> values() const { return values_; }
  const BigCount& operator[](std::size_t n) const { return values_[n]; }
  const BigCount& at(std::size_t n) const { return values_.at(n); }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  TableKind kind_;
  TableBase base_;
  Producer producer_;
  std::vector<BigCount> values_;
};

// First index in 0..min(n_max) where the two tables' values differ.
std::optional<std::size_t> first_mismatch(const CountTable& a, const CountTable& b);

}  // namespace biq
