#include "wvol/profile_calculus.hpp"

#include <cmath>
#include <functional>

#include "wvol/error.hpp"

namespace wvol {

Polynomial incomplete_gamma_polynomial(unsigned k) {
  std::vector<Rational> coeffs(k + 1);
  Rational kfact(factorial(k));
  for (unsigned j = 0; j <= k; ++j) coeffs[j] = kfact / Rational(factorial(j));
  return Polynomial(std::move(coeffs));
}

Rational upper_incomplete_gamma(int k, const Rational& x) {
  if (k < 0) throw Error(ErrorKind::NegativeArgument, "incomplete gamma order must be >= 0");
  if (x < 0) throw Error(ErrorKind::NegativeArgument, "incomplete gamma argument must be >= 0");
  return incomplete_gamma_polynomial(static_cast<unsigned>(k))(x);
}

namespace {

// int_a^inf p(y) e^{-cy} dy. For y^k this is Gamma(k+1, a c) / c^{k+1}
// = e^{-a c} sum_j Q_k[j] a^j c^{j-k-1}.
ExpPoly laplace_from(const Polynomial& p, const Rational& a) {
  LaurentPolynomial acc;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& coeff = p.coeffs()[static_cast<std::size_t>(k)];
    if (coeff == 0) continue;
    Polynomial q = incomplete_gamma_polynomial(static_cast<unsigned>(k));
    Rational a_power = 1;
    for (int j = 0; j <= k; ++j) {
      acc += LaurentPolynomial::monomial(coeff * q.coeff(j) * a_power, j - k - 1);
      a_power *= a;
    }
  }
  return ExpPoly::from_laurent(std::move(acc), -a);
}

}  // namespace

ExpPoly laplace_segment(const Polynomial& p, const Rational& a, const std::optional<Rational>& b) {
  if (a < 0) throw Error(ErrorKind::InvalidInterval, "segment start must be >= 0");
  if (b && !(a < *b)) throw Error(ErrorKind::InvalidInterval, "segment must satisfy a < b");
  ExpPoly result = laplace_from(p, a);
  if (b) result -= laplace_from(p, *b);
  return result;
}

ExpPoly laplace_transform(const PiecewisePolynomial& f) {
  ExpPoly total;
  for (std::size_t i = 0; i < f.piece_count(); ++i) {
    if (f.piece(i).is_zero()) continue;
    total += laplace_segment(f.piece(i), f.piece_begin(i), f.piece_end(i));
  }
  return total;
}

ExpPoly laplace_profile(const PiecewiseProfile& profile) {
  if (profile.is_zero()) throw Error(ErrorKind::EmptyProfile, "profile is identically zero");
  return laplace_transform(profile.density());
}

Interval weighted_moment(const PiecewiseProfile& profile, const Rational& c, unsigned k, long bits) {
  if (c <= 0) throw Error(ErrorKind::NonPositiveArgument, "c must be > 0, got " + to_string(c));
  if (profile.is_zero()) throw Error(ErrorKind::EmptyProfile, "profile is identically zero");
  return laplace_transform(profile.density() * Polynomial::monomial(1, k)).eval(c, bits);
}

namespace {

using Integrand = std::function<double(double)>;

double simpson(double fa, double fm, double fb, double a, double b) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_simpson(const Integrand& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const Integrand& f, double a, double b, double tol) {
  // Seed on a uniform partition so narrow features are not skipped.
  constexpr int kSeeds = 16;
  const double h = (b - a) / kSeeds;
  double total = 0.0;
  for (int i = 0; i < kSeeds; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == kSeeds) ? b : lo + h;
    const double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    total += adaptive_simpson(f, lo, hi, flo, fmid, fhi, simpson(flo, fmid, fhi, lo, hi), tol / kSeeds, 40);
  }
  return total;
}

// Upper bound of int_T^inf |p(y)| e^{-cy} dy using
// int_T^inf y^k e^{-cy} dy = e^{-cT} sum_{j<=k} k!/j! T^j / c^{k+1-j}.
double tail_bound(const Polynomial& p, double c, double t) {
  double bound = 0.0;
  for (int k = 0; k <= p.degree(); ++k) {
    const double a = std::fabs(p.coeff(k).get_d());
    if (a == 0.0) continue;
    double term = 0.0;
    double ratio = 1.0;  // k!/j!
    for (int j = k; j >= 0; --j) {
      term += ratio * std::pow(t, j) / std::pow(c, k + 1 - j);
      ratio *= j;
    }
    bound += a * term;
  }
  return bound * std::exp(-c * t);
}

}  // namespace

double quadrature_oracle(const PiecewisePolynomial& f, double c, double abs_tol) {
  if (!(c > 0.0)) throw Error(ErrorKind::NonPositiveArgument, "quadrature needs c > 0");
  const std::size_t n = f.piece_count();
  const double budget = abs_tol / 2.0 / static_cast<double>(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& p = f.piece(i);
    if (p.is_zero()) continue;
    auto integrand = [&p, c](double y) { return p(y) * std::exp(-c * y); };
    const double a = f.piece_begin(i).get_d();
    double b;
    if (auto end = f.piece_end(i)) {
      b = end->get_d();
    } else {
      double t = a + 1.0 / c;
      while (tail_bound(p, c, t) >= abs_tol / 2.0) t = a + 2.0 * (t - a);
      b = t;
    }
    total += integrate(integrand, a, b, budget);
  }
  return total;
}

}  // namespace wvol
