#include "biq/count_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace biq {

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::f_pq: return "f_pq";
    case TableKind::b_m: return "b_m";
    case TableKind::g_seq: return "g_seq";
    case TableKind::d_pq: return "d_pq";
  }
  return "?";
}

std::string_view to_string(Producer producer) {
  return producer == Producer::oracle_dp ? "oracle_dp" : "recurrence";
}

std::optional<TableKind> parse_table_kind(std::string_view s) {
  for (auto k : {TableKind::f_pq, TableKind::b_m, TableKind::g_seq, TableKind::d_pq})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::optional<Producer> parse_producer(std::string_view s) {
  for (auto p : {Producer::oracle_dp, Producer::recurrence})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

CountTable::CountTable(TableKind kind, TableBase base, Producer producer,
                       std::vector<BigCount> values)
    : kind_(kind), base_(base), producer_(producer), values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("CountTable needs at least index 0");
  if ((kind_ == TableKind::f_pq || kind_ == TableKind::b_m) && values_[0] != 1)
    throw std::invalid_argument("CountTable: value at 0 must be 1 (empty sum)");
}

std::optional<std::size_t> first_mismatch(const CountTable& a, const CountTable& b) {
  const std::size_t n = std::min(a.n_max(), b.n_max());
  for (std::size_t i = 0; i <= n; ++i)
    if (a[i] != b[i]) return i;
  return std::nullopt;
}

}  // namespace biq
