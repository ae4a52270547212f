#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wvol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p", or a plain decimal such as "-1.25" or "1e-3".
/// Throws Error(Parse) on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Exact value of a finite double.
Rational rational_from_double(double x);

inline int sign(const Rational& q) { return sgn(q); }

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);

Integer binomial(long n, long k);

}  // namespace wvol
