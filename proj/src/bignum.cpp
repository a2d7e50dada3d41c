#include "biq/bignum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace biq {

std::string to_decimal(const mpq_class& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

double log2_of(const mpz_class& v) {
  if (sgn(v) <= 0) throw std::domain_error("log of nonpositive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double log_of(const mpz_class& v) { return log2_of(v) * std::numbers::ln2; }

unsigned floor_log(const mpz_class& n, unsigned long base) {
  if (base < 2) throw std::invalid_argument("floor_log: base must be >= 2");
  if (sgn(n) <= 0) throw std::invalid_argument("floor_log: n must be >= 1");
  unsigned k = 0;
  mpz_class power = base;
  while (power <= n) {
    ++k;
    power *= base;
  }
  return k;
}

unsigned floor_log(std::uint64_t n, std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("floor_log: base must be >= 2");
  if (n == 0) throw std::invalid_argument("floor_log: n must be >= 1");
  unsigned k = 0;
  // compare power <= n / base to avoid overflowing power * base
  for (std::uint64_t power = 1; power <= n / base; power *= base) ++k;
  return k;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

}  // namespace biq
