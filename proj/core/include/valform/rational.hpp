#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace valform {

/// Exact rational number; always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q" with optional surrounding whitespace. Throws on malformed input.
Rational parse_rational(std::string_view text);

/// Exact b-th root of a nonnegative integer, if it exists.
std::optional<mpz_class> exact_root(const mpz_class& value, unsigned long degree);

/// q^e for a rational exponent e, when the result is rational (e.g. (4/9)^(1/2) = 2/3).
std::optional<Rational> rational_power(const Rational& base, const Rational& exponent);

}  // namespace valform
