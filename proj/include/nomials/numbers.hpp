#pragma once

// Arbitrary-precision naturals and exact rationals, plus the factorial-based
// coefficient functions everything else is built from.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nomials {

using Natural = mpz_class;
/// Always in lowest terms with a positive denominator (GMP canonical form).
using Rational = mpq_class;

/// Thrown when a brute-force route would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

Rational make_rational(const Natural& numerator, const Natural& denominator);

Natural factorial(std::uint64_t n);

/// n! / ((n-i)! i!), requires i <= n.
Natural binom(std::uint64_t n, std::uint64_t i);

/// Number of size-j multisets over an m-element set: (m+j-1)! / ((m-1)! j!).
/// Requires m >= 1.
Natural multichoose(std::uint64_t m, std::uint64_t j);

/// b^e for naturals.
Natural power(std::uint64_t base, std::uint64_t exponent);

std::string to_string(const Natural& n);
/// "3/10", or "2" when the denominator is 1.
std::string to_string(const Rational& q);
double to_double(const Rational& q);
/// Parses "a/b" or "a" (optionally signed); throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace nomials
