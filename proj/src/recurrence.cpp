#include "biq/recurrence.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace biq {
namespace {

void require_odd_q(std::uint64_t q, const char* what) {
  if (q < 3 || q % 2 == 0)
    throw std::invalid_argument(std::string(what) + ": q must be odd and >= 3, got " +
                                std::to_string(q));
}

void require_n_max(std::size_t n_max, const char* what) {
  if (n_max < 1) throw std::invalid_argument(std::string(what) + ": n_max must be >= 1");
}

}  // namespace

CountTable tabulate_f2q(std::uint64_t q, std::size_t n_max) {
  require_odd_q(q, "tabulate_f2q");
  require_n_max(n_max, "tabulate_f2q");
  std::vector<BigCount> f(n_max + 1);
  f[0] = 1;
  f[1] = 1;
  for (std::size_t n = 1; n < n_max; ++n) {
    if ((n + 1) % q != 0)
      f[n + 1] = f[n];
    else
      f[n + 1] = f[n] + f[(n + 1) / q];
  }
  return CountTable(TableKind::f_pq, {2, q}, Producer::recurrence, std::move(f));
}

CountTable tabulate_mary(std::uint64_t m, std::size_t n_max) {
  if (m < 2) throw std::invalid_argument("tabulate_mary: m must be >= 2");
  require_n_max(n_max, "tabulate_mary");
  std::vector<BigCount> b(n_max + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n % m != 0)
      b[n] = b[n - 1];
    else
      b[n] = b[n - 1] + b[n / m];
  }
  return CountTable(TableKind::b_m, {0, m}, Producer::recurrence, std::move(b));
}

CountTable tabulate_g(std::uint64_t q, std::size_t n_max) {
  require_odd_q(q, "tabulate_g");
  require_n_max(n_max, "tabulate_g");
  std::vector<BigCount> g(n_max + 1);
  g[0] = 0;
  g[1] = 1;
  for (std::size_t n = 1; n < n_max; ++n) g[n + 1] = g[n] + g[ceil_div(n + 1, q)];
  return CountTable(TableKind::g_seq, {2, q}, Producer::recurrence, std::move(g));
}

HSequence::HSequence(std::uint64_t q, std::vector<ExactRational> values)
    : q_(q), values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("HSequence needs index 1");
}

const ExactRational& HSequence::at(std::size_t n) const {
  if (n == 0 || n > n_max()) throw std::out_of_range("HSequence index " + std::to_string(n));
  return values_[n];
}

HSequence tabulate_h(std::uint64_t q, std::size_t n_max) {
  require_odd_q(q, "tabulate_h");
  if (n_max < q) throw std::invalid_argument("tabulate_h: n_max must be >= q");
  std::vector<ExactRational> h(n_max + 1);
  for (std::size_t i = 1; i <= q; ++i) h[i] = static_cast<unsigned long>(i);
  for (std::size_t n = q; n < n_max; ++n) {
    if (n % q != 0) {
      h[n + 1] = h[n] + 1;
    } else {
      const ExactRational& inner = h[n / q + 1];
      assert(sgn(inner) > 0);
      h[n + 1] = h[n] * (1 - 1 / inner) + 1;
    }
  }
  return HSequence(q, std::move(h));
}

}  // namespace biq
