#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagclean {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (optional surrounding whitespace). Decimal
/// points and exponents are rejected: only exact values are accepted.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// Nearest integer, ties rounded towards +infinity.
Integer round_nearest(const Rational& q);

/// Representative of q + Z in [0, 1).
Rational frac(const Rational& q);

/// q^e for a machine-sized exponent; q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);

/// Converts with range checking (throws InvalidArgument on overflow).
long to_long(const Integer& z);

}  // namespace flagclean
