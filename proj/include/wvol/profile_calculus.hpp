#pragma once

#include <optional>

#include "wvol/exppoly.hpp"
#include "wvol/piecewise.hpp"

namespace wvol {

/// The polynomial Q_k(x) = k! * sum_{j=0}^{k} x^j / j!, which satisfies
/// Gamma(k+1, x) = Q_k(x) e^{-x} for integer k >= 0.
Polynomial incomplete_gamma_polynomial(unsigned k);

/// q with Gamma(k+1, x) = q * e^{-x}. Throws NegativeArgument for k < 0 or x < 0.
Rational upper_incomplete_gamma(int k, const Rational& x);

/// int_a^b p(y) e^{-c y} dy as an exponential polynomial in c > 0. An empty b
/// means +inf. Finite segments carry rates -a and -b, infinite ones only -a.
/// Throws InvalidInterval unless 0 <= a < b.
ExpPoly laplace_segment(const Polynomial& p, const Rational& a, const std::optional<Rational>& b);

/// L[f](c) = int_0^inf f(y) e^{-c y} dy, summed piece by piece.
ExpPoly laplace_transform(const PiecewisePolynomial& f);

/// L[R] for a validated profile. Throws EmptyProfile when R is identically 0.
ExpPoly laplace_profile(const PiecewiseProfile& profile);

/// Encloses int_0^inf y^k e^{-c y} R(y) dy.
Interval weighted_moment(const PiecewiseProfile& profile, const Rational& c, unsigned k,
                         long bits = kDefaultPrecisionBits);

/// Independent double-precision check of L[f](c): adaptive Simpson on each
/// piece, with the tail cut at a point T beyond which an analytic bound on the
/// polynomial tail contributes less than abs_tol / 2.
double quadrature_oracle(const PiecewisePolynomial& f, double c, double abs_tol = 1e-10);
inline double quadrature_oracle(const PiecewiseProfile& profile, double c, double abs_tol = 1e-10) {
  return quadrature_oracle(profile.density(), c, abs_tol);
}

}  // namespace wvol
