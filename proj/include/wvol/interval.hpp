#pragma once

#include <mpfr.h>

#include "wvol/rational.hpp"

namespace wvol {

inline constexpr long kMinPrecisionBits = 53;
inline constexpr long kDefaultPrecisionBits = 128;
inline constexpr long kMaxPrecisionBits = 1024;

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint toward -inf and the upper toward +inf, so the result
/// encloses the exact value whenever the inputs enclose theirs. The result of
/// a binary operation carries the larger of the two precisions.
class Interval {
 public:
  /// The degenerate interval [0, 0].
  explicit Interval(long bits = kDefaultPrecisionBits);
  /// Tightest enclosure of q at the given precision.
  Interval(const Rational& q, long bits);
  Interval(const Rational& lo, const Rational& hi, long bits);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  long precision() const { return static_cast<long>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  /// Endpoints rounded outward to double.
  double lower() const;
  double upper() const;
  double midpoint() const;
  /// hi - lo rounded up.
  double width() const;
  Rational lower_rational() const;
  Rational upper_rational() const;
  Rational midpoint_rational() const;

  bool contains(const Rational& q) const;
  bool contains(double x) const;
  /// True when other is a subset of this interval.
  bool contains(const Interval& other) const;
  bool overlaps(const Interval& other) const;
  bool is_positive() const { return mpfr_sgn(lo_) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_) < 0; }
  bool is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws InvalidArgument when b contains zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval log(const Interval& x);

  static Interval hull(const Interval& a, const Interval& b);
  /// Rounds raw MPFR endpoints outward into an interval of the given precision.
  static Interval from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, long bits);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Encloses e^q. The argument is halved until it is at most 1/2, the Taylor
/// series is summed with directed rounding plus an explicit remainder bound,
/// and the result is squared back up.
Interval exp_rational(const Rational& q, long bits);

/// Encloses log x. Throws NonPositiveArgument unless x is strictly positive.
Interval log(const Interval& x);

}  // namespace wvol
