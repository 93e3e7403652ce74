/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals (GMP-backed) plus small helpers.
 *
 * `Rational` is the coefficient domain of everything in this library: it is
 * GMP's canonical mpq_class (always stored reduced with positive
 * denominator), so equality is plain comparison and no floating point ever
 * appears.
 */
#pragma once

#include <gmpxx.h>

#include <string>

#include "qca/common.hpp"

namespace qca {

using Integer = mpz_class;
using Rational = mpq_class;

/// r^e for integer e (negative exponents allowed; throws on 0^negative).
Rational pow_rational(const Rational& r, long e);

/// Integer power b^e, e >= 0.
Integer pow_integer(const Integer& b, unsigned long e);

/// Parse "p" or "p/q" (optional leading '-'); throws ParseError.
Rational parse_rational(const std::string& text);

/// Canonical textual form "p" or "p/q".
std::string rational_str(const Rational& r);

/// Multiplicative inverse (generic-solver customization point).
Rational invert_elem(const Rational& r);

}  // namespace qca
