#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ncontact {

/// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) through arithmetic; construct via make_rational or
/// parse_rational so the invariant also holds on entry.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

/// Accepts "p", "-p" and "p/q" with decimal digits.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

/// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace ncontact
