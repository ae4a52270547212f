#pragma once

#include <utility>
#include <vector>

#include "wvol/rational.hpp"

namespace wvol {

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending order. The zero polynomial has an empty coefficient list and
/// every other value has a nonzero highest coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& value);
  static Polynomial monomial(const Rational& coeff, unsigned degree);
  /// The polynomial y.
  static Polynomial variable();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& y) const;
  double operator()(double y) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  /// Exact definite integral over [a, b].
  Rational integrate(const Rational& a, const Rational& b) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace wvol
