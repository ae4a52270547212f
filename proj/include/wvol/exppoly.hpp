#pragma once

#include <vector>

#include "wvol/interval.hpp"
#include "wvol/laurent.hpp"

namespace wvol {

/// One summand p(c) * e^{rate * c}.
struct ExpTerm {
  LaurentPolynomial poly;
  Rational rate;

  friend bool operator==(const ExpTerm& a, const ExpTerm& b) { return a.rate == b.rate && a.poly == b.poly; }
};

/// Rational exponential polynomial sum_i p_i(c) e^{r_i c} in the variable
/// c > 0. Canonical form: rates pairwise distinct, sorted ascending, every
/// p_i nonzero. Structural equality is therefore semantic equality.
class ExpPoly {
 public:
  ExpPoly() = default;

  /// Normalizes arbitrary terms: merges equal rates, drops zero polynomials.
  static ExpPoly from_terms(std::vector<ExpTerm> terms);
  static ExpPoly from_laurent(LaurentPolynomial p, const Rational& rate = 0);
  /// e^{rate * c}.
  static ExpPoly exponential(const Rational& rate);
  static ExpPoly constant(const Rational& value);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Term (p, r) maps to (p' + r p, r).
  ExpPoly derivative() const;

  /// Rigorous enclosure of the value at c > 0 (NonPositiveArgument otherwise).
  Interval eval(const Rational& c, long bits = kDefaultPrecisionBits) const;
  /// Plain double evaluation; diagnostics only.
  double approx(double c) const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(const Rational& s);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, const Rational& s) { return a *= s; }
  friend ExpPoly operator*(const Rational& s, ExpPoly a) { return a *= s; }
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<ExpTerm> terms_;
};

/// Certified sign (-1, 0, +1) of f(c). Starts at start_bits and doubles the
/// precision while the enclosure straddles zero, up to max_bits; then throws
/// InconclusiveSign. Zero is reported only when the value is exactly zero.
int certified_sign(const ExpPoly& f, const Rational& c, long start_bits = kDefaultPrecisionBits,
                   long max_bits = kMaxPrecisionBits);

}  // namespace wvol
