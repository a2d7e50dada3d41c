#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace biq {

// Counts are nonnegative by construction; nothing in the library subtracts them.
using BigCount = mpz_class;
// mpq_class canonicalizes after every arithmetic operation, so values stay in lowest terms.
using ExactRational = mpq_class;

inline std::string to_decimal(const mpz_class& v) { return v.get_str(10); }

std::string to_decimal(const mpq_class& v);

// Natural log and base-2 log of a positive big integer, accurate to double
// precision even when the value exceeds the double range.
double log_of(const mpz_class& v);
double log2_of(const mpz_class& v);

// Largest k with base^k <= n, by repeated multiplication. Requires n >= 1, base >= 2.
unsigned floor_log(const mpz_class& n, unsigned long base);
unsigned floor_log(std::uint64_t n, std::uint64_t base);

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b);

}  // namespace biq
