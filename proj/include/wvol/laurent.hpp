#pragma once

#include <map>

#include "wvol/polynomial.hpp"

namespace wvol {

/// Sparse Laurent polynomial in c with rational coefficients. Zero
/// coefficients are never stored. Exponents are confined to
/// [-kMaxExponent, kMaxExponent]; leaving that range raises ExponentOverflow.
class LaurentPolynomial {
 public:
  static constexpr int kMaxExponent = 64;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(const Polynomial& p);

  static LaurentPolynomial monomial(const Rational& coeff, int exponent);
  static LaurentPolynomial constant(const Rational& value) { return monomial(value, 0); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Exact value at c != 0.
  Rational operator()(const Rational& c) const;
  double operator()(double c) const;

  LaurentPolynomial derivative() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const Rational& s);

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& s) { return a *= s; }
  friend LaurentPolynomial operator*(const Rational& s, LaurentPolynomial a) { return a *= s; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void accumulate(int exponent, const Rational& coeff);

  std::map<int, Rational> terms_;
};

}  // namespace wvol
