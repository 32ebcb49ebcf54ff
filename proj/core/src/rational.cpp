#include "valform/rational.hpp"

#include <cctype>

#include "valform/errors.hpp"

namespace valform {

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw Error("rational", ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error("rational", ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::optional<mpz_class> exact_root(const mpz_class& value, unsigned long degree) {
  if (value < 0 || degree == 0) return std::nullopt;
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), degree) == 0) return std::nullopt;
  return root;
}

std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
  if (base == 0) {
    if (exponent > 0) return Rational(0);
    return std::nullopt;
  }
  if (!exponent.get_num().fits_slong_p() || !exponent.get_den().fits_ulong_p()) return std::nullopt;
  const long num = exponent.get_num().get_si();
  const unsigned long den = exponent.get_den().get_ui();

  Rational b = base;
  bool negate = false;
  if (b < 0) {
    // Odd roots of negatives are real and rational when the magnitude is a perfect power.
    if (den % 2 == 0) return std::nullopt;
    b = -b;
    negate = (num % 2 != 0);
  }
  auto rn = exact_root(b.get_num(), den);
  auto rd = exact_root(b.get_den(), den);
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  root.canonicalize();

  const unsigned long e = static_cast<unsigned long>(num < 0 ? -num : num);
  mpz_class pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), root.get_num().get_mpz_t(), e);
  mpz_pow_ui(pd.get_mpz_t(), root.get_den().get_mpz_t(), e);
  Rational result = num < 0 ? Rational(pd, pn) : Rational(pn, pd);
  result.canonicalize();
  return negate ? Rational(-result) : result;
}

}  // namespace valform
