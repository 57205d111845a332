#include "schurhr/rational.hpp"

#include <cctype>

#include "schurhr/errors.hpp"

namespace schurhr {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
  }
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  if (slash == std::string_view::npos) return Rational(Integer(num_str));
  std::string_view den = s.substr(slash + 1);
  if (den.empty() || den[0] == '-' || den[0] == '+' || !is_integer_literal(den)) {
    throw InvalidArgument("not a rational literal: '" + std::string(text) + "'");
  }
  Integer d(std::string{den});
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(num_str), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational power(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace schurhr
