#include "wvol/error.hpp"
#include "wvol/profile_calculus.hpp"
#include "wvol/weighted_volume.hpp"

namespace wvol {

Interval log_weighted_volume_at(const ValuationProfile& vp, const Rational& c, long bits) {
  return log(weighted_volume_at(vp, c, bits));
}

Interval jensen_bound_window(const ValuationProfile& vp, const Rational& c, const Rational& s1, const Rational& s2,
                             long bits) {
  if (c <= 0) throw Error(ErrorKind::NonPositiveArgument, "c must be > 0");
  if (s1 < 0 || !(s1 < s2)) throw Error(ErrorKind::InvalidInterval, "window must satisfy 0 <= s1 < s2");
  const PiecewisePolynomial& r = vp.profile().density();
  const Rational mass = r.integrate(s1, s2);
  if (mass == 0) {
    throw Error(ErrorKind::EmptyWindow, "profile has no mass on [" + to_string(s1) + ", " + to_string(s2) + "]");
  }
  const Rational moment = (r * Polynomial::variable()).integrate(s1, s2);
  const Rational exact_part = c * vp.log_discrepancy() - c * moment / mass;
  return Interval(exact_part, bits) + log(Interval(mass, bits));
}

Interval jensen_bound_interior(const ValuationProfile& vp, const Rational& c, const Rational& theta, long bits) {
  if (c <= 0) throw Error(ErrorKind::NonPositiveArgument, "c must be > 0");
  if (theta <= 0 || theta >= 1) throw Error(ErrorKind::InvalidArgument, "theta must lie in (0, 1)");
  const Rational shifted = theta * c;
  const Interval z = weighted_moment(vp.profile(), shifted, 0, bits);
  const Interval m = Interval(c, bits) * weighted_moment(vp.profile(), shifted, 1, bits);
  return Interval(c * vp.log_discrepancy(), bits) + log(z) - Interval(1 - theta, bits) * m / z;
}

}  // namespace wvol
