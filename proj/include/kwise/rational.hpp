#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kwise {

/// Exact arbitrary-precision rational. Every size, weight and bound in the
/// library is carried as one of these; there is no floating point in the core.
using Rational = mpq_class;
using Integer = mpz_class;

bool is_integer(const Rational& q);

/// Smallest integer >= q, by exact floor division.
Integer ceil(const Rational& q);
Integer floor(const Rational& q);

/// Parses "n" or "p/q" in canonical form: no sign other than a leading '-',
/// no leading zeros, q > 1 and gcd(p, q) = 1. Anything else throws
/// Error(ErrorKind::invalid_input).
Rational parse_rational(std::string_view text);

/// Canonical text form, the inverse of parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace kwise
