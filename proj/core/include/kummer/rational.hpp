#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kummer {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p/q" or a decimal-free integer ratio.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Exact rational root of the given degree, or false when none exists.
bool exact_root(const Rational& q, unsigned degree, Rational& root);

Rational pow(const Rational& base, int exponent);

}  // namespace kummer
