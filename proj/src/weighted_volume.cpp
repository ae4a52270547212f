#include "wvol/weighted_volume.hpp"

#include <cmath>

#include "wvol/error.hpp"
#include "wvol/profile_calculus.hpp"

namespace wvol {

ValuationProfile::ValuationProfile(std::string name, int dim, Rational log_discrepancy, PiecewiseProfile profile)
    : name_(std::move(name)), dim_(dim), log_discrepancy_(std::move(log_discrepancy)), profile_(std::move(profile)) {
  if (dim_ < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1, got " + std::to_string(dim_));
  if (log_discrepancy_ <= 0) {
    throw Error(ErrorKind::NonPositiveArgument,
                "log discrepancy must be > 0 (log terminal), got " + to_string(log_discrepancy_));
  }
  if (profile_.is_zero()) throw Error(ErrorKind::EmptyProfile, "profile is identically zero");
}

ExpPoly weighted_volume_fn(const ValuationProfile& vp) {
  return ExpPoly::exponential(vp.log_discrepancy()) * laplace_profile(vp.profile());
}

Interval weighted_volume_at(const ValuationProfile& vp, const Rational& c, long bits) {
  return weighted_volume_fn(vp).eval(c, bits);
}

ExpPoly critical_fn(const ValuationProfile& vp) {
  const Polynomial shift({-vp.log_discrepancy(), Rational(1)});
  return laplace_transform(vp.profile().density() * shift);
}

ValuationProfile blowup_point_profile(int n, const Rational& a) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "blowup profile needs n >= 2, got " + std::to_string(n));
  if (a <= 0) throw Error(ErrorKind::NonPositiveArgument, "discrepancy a must be > 0");
  const unsigned m = static_cast<unsigned>(n - 1);
  Polynomial r = Polynomial({a, Rational(1)}).pow(m) * (Rational(1) / Rational(factorial(m)));
  return ValuationProfile("blowup_n" + std::to_string(n) + "_a" + to_string(a), n, 1, PiecewiseProfile::polynomial(r));
}

ValuationProfile germ_profile(int n, const Rational& log_discrepancy, const Rational& volume) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "germ dimension must be >= 1, got " + std::to_string(n));
  if (volume <= 0) throw Error(ErrorKind::NonPositiveArgument, "germ volume must be > 0");
  const unsigned m = static_cast<unsigned>(n - 1);
  Polynomial r = Polynomial::monomial(volume / Rational(factorial(m)), m);
  return ValuationProfile("germ_n" + std::to_string(n), n, log_discrepancy, PiecewiseProfile::polynomial(r));
}

Interval ExpMultiple::value(long bits) const {
  return Interval(coefficient, bits) * exp_rational(Rational(e_power), bits);
}

double ExpMultiple::approx() const { return coefficient.get_d() * std::exp(static_cast<double>(e_power)); }

GermMinimum germ_minimum(int n, const Rational& log_discrepancy, const Rational& volume) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "germ dimension must be >= 1");
  if (log_discrepancy <= 0 || volume <= 0) throw Error(ErrorKind::NonPositiveArgument, "A and V must be > 0");
  const auto un = static_cast<unsigned>(n);
  Rational coeff = volume * pow(log_discrepancy, un) / pow(Rational(n), un);
  return {Rational(n) / log_discrepancy, {coeff, n}};
}

ExpMultiple normalized_volume_bridge(int n, const Rational& nvol) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  if (nvol <= 0) throw Error(ErrorKind::NonPositiveArgument, "normalized volume must be > 0");
  return {nvol / pow(Rational(n), static_cast<unsigned>(n)), n};
}

ValuationProfile pullback_profile(const ValuationProfile& base, const Rational& fiber_factor, int total_dim) {
  if (fiber_factor <= 0) throw Error(ErrorKind::NonPositiveArgument, "fiber factor must be > 0");
  return ValuationProfile(base.name() + "_pullback", total_dim, base.log_discrepancy(),
                          base.profile().scaled(fiber_factor));
}

Rational compact_fano_wv(int n, const Rational& anticanonical_volume) {
  if (n < 1) throw Error(ErrorKind::InvalidDimension, "dimension must be >= 1");
  if (anticanonical_volume <= 0) throw Error(ErrorKind::NonPositiveArgument, "anticanonical volume must be > 0");
  return anticanonical_volume / Rational(factorial(static_cast<unsigned>(n)));
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

bool ComparisonReport::all_pass() const {
  for (const auto& r : results) {
    if (r.verdict != Verdict::Pass) return false;
  }
  return true;
}

ComparisonReport compare_reports(const std::vector<ReportEntry>& entries, const std::vector<Relation>& relations) {
  ComparisonReport report;
  for (const auto& rel : relations) {
    const ReportEntry& l = entries.at(rel.lhs);
    const ReportEntry& r = entries.at(rel.rhs);
    Verdict v = Verdict::Indeterminate;
    if (mpfr_lessequal_p(l.value.hi(), r.value.lo())) {
      v = Verdict::Pass;
    } else if (mpfr_greater_p(l.value.lo(), r.value.hi())) {
      v = Verdict::Fail;
    }
    report.results.push_back({l.name, r.name, l.value, r.value, v});
  }
  return report;
}

Polynomial divcont_printed_polynomial(int n, const Rational& a) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "divisorial contraction needs n >= 2");
  const long m = n - 1;
  std::vector<Rational> coeffs(static_cast<std::size_t>(m + 1));
  for (long k = 0; k <= m; ++k) {
    coeffs[static_cast<std::size_t>(k)] = Rational(binomial(m, k) * factorial(static_cast<unsigned>(k))) *
                                          pow(a, static_cast<unsigned>(m - k));
  }
  return Polynomial(std::move(coeffs)) * (Rational(1) / Rational(factorial(static_cast<unsigned>(m))));
}

ExpPoly divcont_printed_weighted_volume(int n, const Rational& a) {
  LaurentPolynomial p(divcont_printed_polynomial(n, a));
  return ExpPoly::from_laurent(p * LaurentPolynomial::monomial(1, -2), 1);
}

Polynomial divcont_printed_critical(int n, const Rational& a) {
  Polynomial p = divcont_printed_polynomial(n, a);
  return Polynomial({Rational(-2), Rational(1)}) * p + Polynomial::variable() * p.derivative();
}

}  // namespace wvol
