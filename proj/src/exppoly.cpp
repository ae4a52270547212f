#include "wvol/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "wvol/error.hpp"

namespace wvol {

ExpPoly ExpPoly::from_terms(std::vector<ExpTerm> terms) {
  std::map<Rational, LaurentPolynomial> merged;
  for (auto& t : terms) {
    t.rate.canonicalize();
    merged[t.rate] += t.poly;
  }
  ExpPoly e;
  for (auto& [rate, poly] : merged) {
    if (!poly.is_zero()) e.terms_.push_back({std::move(poly), rate});
  }
  return e;
}

ExpPoly ExpPoly::from_laurent(LaurentPolynomial p, const Rational& rate) {
  std::vector<ExpTerm> t;
  t.push_back({std::move(p), rate});
  return from_terms(std::move(t));
}

ExpPoly ExpPoly::exponential(const Rational& rate) { return from_laurent(LaurentPolynomial::constant(1), rate); }

ExpPoly ExpPoly::constant(const Rational& value) { return from_laurent(LaurentPolynomial::constant(value)); }

ExpPoly ExpPoly::derivative() const {
  std::vector<ExpTerm> d;
  d.reserve(terms_.size());
  for (const auto& t : terms_) d.push_back({t.poly.derivative() + t.poly * t.rate, t.rate});
  return from_terms(std::move(d));
}

Interval ExpPoly::eval(const Rational& c, long bits) const {
  if (c <= 0) throw Error(ErrorKind::NonPositiveArgument, "c must be > 0, got " + to_string(c));
  Interval sum(bits);
  for (const auto& t : terms_) {
    Interval coeff(t.poly(c), bits);
    sum = sum + (t.rate == 0 ? coeff : coeff * exp_rational(t.rate * c, bits));
  }
  return sum;
}

double ExpPoly::approx(double c) const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += t.poly(c) * std::exp(t.rate.get_d() * c);
  return acc;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& t : r.terms_) t.poly = -t.poly;
  return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  std::vector<ExpTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = from_terms(std::move(all));
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) { return *this += -other; }

ExpPoly& ExpPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.poly *= s;
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({x.poly * y.poly, x.rate + y.rate});
  }
  return ExpPoly::from_terms(std::move(prod));
}

int certified_sign(const ExpPoly& f, const Rational& c, long start_bits, long max_bits) {
  if (c <= 0) throw Error(ErrorKind::NonPositiveArgument, "c must be > 0, got " + to_string(c));
  if (f.is_zero()) return 0;
  // A single exponential rate factors out: the sign is that of p(c), exactly.
  if (f.terms().size() == 1) return sign(f.terms().front().poly(c));
  for (long bits = start_bits; bits <= max_bits; bits *= 2) {
    Interval v = f.eval(c, bits);
    if (v.is_positive()) return 1;
    if (v.is_negative()) return -1;
    if (v.is_exact_zero()) return 0;
  }
  throw Error(ErrorKind::InconclusiveSign,
              "sign undecided at c = " + to_string(c) + " with " + std::to_string(max_bits) + " bits");
}

}  // namespace wvol
