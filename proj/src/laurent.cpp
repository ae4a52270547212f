#include "wvol/laurent.hpp"

#include <cmath>
#include <cstdlib>

#include "wvol/error.hpp"

namespace wvol {

namespace {

void check_exponent(long exponent) {
  if (std::labs(exponent) > LaurentPolynomial::kMaxExponent) {
    throw Error(ErrorKind::ExponentOverflow, "Laurent exponent " + std::to_string(exponent) + " out of range");
  }
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(const Polynomial& p) {
  for (int k = 0; k <= p.degree(); ++k) accumulate(k, p.coeff(k));
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& coeff, int exponent) {
  LaurentPolynomial l;
  l.accumulate(exponent, coeff);
  return l;
}

void LaurentPolynomial::accumulate(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  check_exponent(exponent);
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPolynomial::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPolynomial::operator()(const Rational& c) const {
  if (c == 0) throw Error(ErrorKind::NonPositiveArgument, "Laurent polynomial evaluated at 0");
  Rational acc = 0;
  for (const auto& [e, a] : terms_) {
    Rational power = pow(c, static_cast<unsigned>(std::abs(e)));
    acc += e >= 0 ? Rational(a * power) : Rational(a / power);
  }
  return acc;
}

double LaurentPolynomial::operator()(double c) const {
  double acc = 0.0;
  for (const auto& [e, a] : terms_) acc += a.get_d() * std::pow(c, e);
  return acc;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
  LaurentPolynomial d;
  for (const auto& [e, a] : terms_) d.accumulate(e - 1, a * e);
  return d;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, a] : r.terms_) a = -a;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, a] : other.terms_) accumulate(e, a);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, a] : other.terms_) accumulate(e, -a);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, a] : terms_) a *= s;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.accumulate(ea + eb, ca * cb);
  }
  return r;
}

}  // namespace wvol
