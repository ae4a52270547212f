#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wvol/exppoly.hpp"
#include "wvol/piecewise.hpp"

namespace wvol {

/// One rescaling family {c * v}_{c > 0} of a vertical valuation v: its
/// dimension n, log discrepancy A = A_X(v) > 0 and restricted-volume profile
/// R(y) in the valuation-value variable y.
///
/// Normalization: for the rescaled valuation c * v the weighted volume is
///   W(c) = e^{c A} int_0^inf e^{-x} (1/c) R(x/c) dx = e^{c A} L[R](c)
/// after substituting x = c y. Dimension counts are normalized by l^n with no
/// factorial, so the smooth n-dimensional germ gives W = e^n.
class ValuationProfile {
 public:
  /// Throws InvalidDimension (dim < 1), NonPositiveArgument (A <= 0) or
  /// EmptyProfile (R identically zero).
  ValuationProfile(std::string name, int dim, Rational log_discrepancy, PiecewiseProfile profile);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const Rational& log_discrepancy() const { return log_discrepancy_; }
  const PiecewiseProfile& profile() const { return profile_; }

  friend bool operator==(const ValuationProfile& a, const ValuationProfile& b) {
    return a.name_ == b.name_ && a.dim_ == b.dim_ && a.log_discrepancy_ == b.log_discrepancy_ &&
           a.profile_ == b.profile_;
  }

 private:
  std::string name_;
  int dim_;
  Rational log_discrepancy_;
  PiecewiseProfile profile_;
};

/// W(c) = e^{c A} L[R](c). Exponential rates are A - t_i over breakpoints t_i.
ExpPoly weighted_volume_fn(const ValuationProfile& vp);

/// Encloses W(c); NonPositiveArgument for c <= 0.
Interval weighted_volume_at(const ValuationProfile& vp, const Rational& c, long bits = kDefaultPrecisionBits);

/// G(c) = int_0^inf e^{-c y} (y - A) R(y) dy, so that W'(c) = -e^{c A} G(c).
/// W decreases where G > 0 and increases where G < 0.
ExpPoly critical_fn(const ValuationProfile& vp);

struct MinimizeConfig {
  Rational c_min{1, 1000};
  Rational c_max{50};
  int grid_points = 512;
  Rational tol{1, 1000000000000};
  long precision = kDefaultPrecisionBits;
};

enum class MinimizationStatus { InteriorMin, BoundaryLow, BoundaryHigh };

std::string_view status_name(MinimizationStatus status);

struct CriticalPoint {
  Rational lo;
  Rational hi;
  Interval value;  // W on the bracket
};

struct MinimizationResult {
  Interval c_star;
  Interval w_star;
  ExpPoly critical;
  std::pair<Rational, Rational> bracket;
  /// Sign changes of G along the grid (both directions).
  int sign_changes = 0;
  MinimizationStatus status = MinimizationStatus::InteriorMin;
  /// Every certified interior local minimum, ascending in c.
  std::vector<CriticalPoint> minima;
};

/// Scans a log-spaced grid on [c_min, c_max] for certified + to - sign
/// changes of G, bisects each to width < tol, and returns the smallest W
/// among them (the smallest c on ties). Without an interior minimum the
/// status names the boundary where W is smaller. Deterministic in cfg.
/// Throws InvalidArgument for a bad config and InconclusiveSign when a sign
/// cannot be certified at kMaxPrecisionBits.
MinimizationResult minimize_scaling(const ValuationProfile& vp, const MinimizeConfig& cfg = {});

/// Log-spaced grid c_min = g_0 < ... < g_{n-1} = c_max with exact endpoints
/// and interior points rounded to double.
std::vector<Rational> log_spaced_grid(const Rational& c_min, const Rational& c_max, int points);

/// Blowup of a point in an n-fold with discrepancy a: A = 1 and
/// R(y) = (a + y)^{n-1} / (n-1)!.
ValuationProfile blowup_point_profile(int n, const Rational& a);

/// Germ valuation with log discrepancy A and volume V: R(y) = V y^{n-1}/(n-1)!,
/// so W(c) = V e^{c A} / c^n.
ValuationProfile germ_profile(int n, const Rational& log_discrepancy, const Rational& volume);

/// coefficient * e^{e_power}.
struct ExpMultiple {
  Rational coefficient;
  int e_power = 0;

  Interval value(long bits = kDefaultPrecisionBits) const;
  double approx() const;
};

struct GermMinimum {
  Rational c_star;     // n / A
  ExpMultiple w_star;  // V A^n / n^n * e^n
};

/// Closed-form minimizer of V e^{c A} / c^n.
GermMinimum germ_minimum(int n, const Rational& log_discrepancy, const Rational& volume);

/// (e^n / n^n) * nvol: the weighted volume of a germ with normalized volume nvol.
ExpMultiple normalized_volume_bridge(int n, const Rational& nvol);

/// Pulls a base valuation back along a flat fibration: A is unchanged and the
/// density is multiplied by fiber_factor = (-K_X|_F)^f / f!. The caller
/// supplies the total-space dimension.
ValuationProfile pullback_profile(const ValuationProfile& base, const Rational& fiber_factor, int total_dim);

/// (-K_X)^n / n! for a K-semistable Fano variety.
Rational compact_fano_wv(int n, const Rational& anticanonical_volume);

/// Lower bound for log W(c) from Jensen's inequality on the window
/// [s1, s2] (in y) with probability density R / M:
///   c A + log M - c * m1 / M,  M = int_{s1}^{s2} R, m1 = int_{s1}^{s2} y R.
/// Throws EmptyWindow when M = 0.
Interval jensen_bound_window(const ValuationProfile& vp, const Rational& c, const Rational& s1, const Rational& s2,
                             long bits = kDefaultPrecisionBits);

/// Lower bound for log W(c) from Jensen's inequality with the convex
/// function e^{-(1-theta) x} and probability density e^{-theta x} rho / Z,
/// rho being the DH density in x:
///   c A + log Z - (1 - theta) * M / Z,
///   Z = L[R](theta c),  M = c * L[y R](theta c).
Interval jensen_bound_interior(const ValuationProfile& vp, const Rational& c, const Rational& theta,
                               long bits = kDefaultPrecisionBits);

/// Log of W(c), for comparison with the Jensen bounds.
Interval log_weighted_volume_at(const ValuationProfile& vp, const Rational& c, long bits = kDefaultPrecisionBits);

enum class Verdict { Pass, Fail, Indeterminate };

std::string_view verdict_name(Verdict v);

struct ReportEntry {
  std::string name;
  Interval value;
};

/// Relation entries[lhs] <= entries[rhs].
struct Relation {
  std::size_t lhs;
  std::size_t rhs;
};

struct RelationResult {
  std::string lhs;
  std::string rhs;
  Interval lhs_value;
  Interval rhs_value;
  Verdict verdict;
};

struct ComparisonReport {
  std::vector<RelationResult> results;
  bool all_pass() const;
};

/// Pass when lhs.hi <= rhs.lo, Fail when lhs.lo > rhs.hi, otherwise
/// Indeterminate.
ComparisonReport compare_reports(const std::vector<ReportEntry>& entries, const std::vector<Relation>& relations);

/// The divisorial-contraction sum as printed with positive powers c^k:
/// P(c) = 1/(n-1)! sum_k binom(n-1, k) a^{n-1-k} k! c^k, W = e^c P(c) / c^2.
/// Kept as an alternative reading; blowup_point_profile is the derived form.
Polynomial divcont_printed_polynomial(int n, const Rational& a);
ExpPoly divcont_printed_weighted_volume(int n, const Rational& a);
/// (c - 2) P(c) + c P'(c), whose roots are the critical points of the printed W.
Polynomial divcont_printed_critical(int n, const Rational& a);

}  // namespace wvol
