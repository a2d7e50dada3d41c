#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "biq/bignum.hpp"
#include "biq/count_table.hpp"

namespace biq {

// f_{2,q}(n) for odd q >= 3:
//   f(n + 1) = f(n)                    if q does not divide n + 1
//   f(n + 1) = f(n) + f((n + 1) / q)   otherwise
// with f(0) = f(1) = 1.
CountTable tabulate_f2q(std::uint64_t q, std::size_t n_max);

// b_m(n): b(0) = 1, b(n) = b(n - 1) + [m | n] b(n / m).
CountTable tabulate_mary(std::uint64_t m, std::size_t n_max);

// g(n), the common value of f_{2,q} on [qn - q, qn - 1]:
//   g(0) = 0, g(1) = 1, g(n + 1) = g(n) + g(ceil((n + 1) / q)).
CountTable tabulate_g(std::uint64_t q, std::size_t n_max);

// h(1..q) = 1..q and for n >= q
//   h(n + 1) = h(n) + 1                         if q does not divide n
//   h(n + 1) = h(n) (1 - 1 / h(n / q + 1)) + 1  otherwise
// in exact rationals.
class HSequence {
 public:
  HSequence(std::uint64_t q, std::vector<ExactRational> values);

  std::uint64_t q() const { return q_; }
  std::size_t n_max() const { return values_.size() - 1; }
  // 1-based; index 0 is unused.
  const ExactRational& operator[](std::size_t n) const { return values_[n]; }
  const ExactRational& at(std::size_t n) const;
  std::span<const ExactRational> values() const { return values_; }

 private:
  std::uint64_t q_;
  std::vector<ExactRational> values_;
};

HSequence tabulate_h(std::uint64_t q, std::size_t n_max);

}  // namespace biq
