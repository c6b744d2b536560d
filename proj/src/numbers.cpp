#include "nomials/numbers.hpp"

#include <cctype>

namespace nomials {

Rational make_rational(const Natural& numerator, const Natural& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Natural factorial(std::uint64_t n) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Natural binom(std::uint64_t n, std::uint64_t i) {
  if (i > n) throw std::invalid_argument("binom: requires 0 <= i <= n");
  Natural out;
  mpz_bin_uiui(out.get_mpz_t(), n, i);
  return out;
}

Natural multichoose(std::uint64_t m, std::uint64_t j) {
  if (m == 0) throw std::invalid_argument("multichoose: requires m >= 1");
  return binom(m + j - 1, j);
}

Natural power(std::uint64_t base, std::uint64_t exponent) {
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

std::string to_string(const Natural& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational parse_rational(const std::string& text) {
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (s.size() == start) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  const std::string num_clean = num[0] == '+' ? num.substr(1) : num;
  return make_rational(Natural(num_clean), Natural(den));
}

}  // namespace nomials
