#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "wvol/interval.hpp"
#include "wvol/weighted_volume.hpp"

namespace wvol {

/// Weighted monomial valuation on the smooth germ of A^n.
struct MonomialGerm {
  std::vector<Rational> weights;
};

/// Cone over a degree-d hypersurface in n_vars variables, valued by the order
/// of vanishing at the vertex. Log discrepancy n_vars - d, dimension n_vars - 1.
struct HypersurfaceCone {
  int n_vars;
  int degree;
};

/// Blowup of A^n at the origin over A^n. Sections of -l K_X are the monomials
/// of total degree >= a l; the exceptional valuation has log discrepancy 1.
struct BlowupFibration {
  int n;
  int a;
};

class GermCountingModel {
 public:
  using Variant = std::variant<MonomialGerm, HypersurfaceCone, BlowupFibration>;

  /// Factories validate: weights > 0; 2 <= d <= n_vars; n >= 2, a >= 1.
  static GermCountingModel monomial_germ(std::vector<Rational> weights);
  static GermCountingModel hypersurface_cone(int n_vars, int degree);
  static GermCountingModel blowup_fibration(int n, int a);

  const Variant& variant() const { return variant_; }
  std::string_view variant_name() const;
  /// Exponent n in the l^{-n} normalization.
  int dimension() const;
  /// Log discrepancy of the unscaled valuation; A(v) = scaling * this.
  Rational log_discrepancy() const;
  /// Monomial germs grade by weighted degree in units of 1/L, L the lcm of
  /// the weight denominators. 1 for the other variants.
  Integer grade_unit_denominator() const;

  friend bool operator==(const GermCountingModel& a, const GermCountingModel& b);

 private:
  explicit GermCountingModel(Variant v) : variant_(std::move(v)) {}

  Variant variant_;
};

/// #{a in Z^n_{>=0} : <w, a> < s}. Throws OverflowGuard beyond 2^63 - 1.
std::int64_t lattice_count(std::span<const Rational> weights, const Rational& s);

/// Dimension of the degree-k graded piece: weighted-degree count for
/// monomial germs, C(k+n-1, n-1) - C(k-d+n-1, n-1) for hypersurface cones,
/// and C(k+n-1, n-1) for the blowup model.
Integer graded_dim(const GermCountingModel& model, long k);

inline constexpr double kDefaultTailEps = 1e-12;

/// Quantized weighted volume at level l:
///   W_l = e^{A(v)} l^{-n} sum_k graded_dim(k) e^{-(k - shift) scaling / l},
/// shift = a l for the blowup model and 0 otherwise. Monomial germs use the
/// separable closed form prod_i 1 / (1 - e^{-scaling w_i / l}); the other
/// variants sum term by term until a geometric majorant bounds the remainder
/// by tail_eps relative to the partial sum, and that bound widens the result.
Interval quantized_weighted_volume(const GermCountingModel& model, const Rational& scaling, long level,
                                   double tail_eps = kDefaultTailEps, long bits = kDefaultPrecisionBits);

/// Term-by-term summation for every variant, including monomial germs.
Interval quantized_sum_truncated(const GermCountingModel& model, const Rational& scaling, long level,
                                 double tail_eps = kDefaultTailEps, long bits = kDefaultPrecisionBits);

/// Limit profile of the model: germ_profile for germs and cones,
/// blowup_point_profile for the blowup model.
ValuationProfile exact_profile(const GermCountingModel& model);

struct ConvergenceRow {
  long level;
  Interval value;
  Interval exact;
  double abs_err;
  std::optional<double> err_ratio;
};

/// One row per level; levels must be ascending.
std::vector<ConvergenceRow> convergence_study(const GermCountingModel& model, const Rational& scaling,
                                              std::span<const long> levels, double tail_eps = kDefaultTailEps,
                                              long bits = kDefaultPrecisionBits);

}  // namespace wvol
