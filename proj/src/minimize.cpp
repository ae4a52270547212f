#include <cmath>
#include <optional>

#include "wvol/error.hpp"
#include "wvol/weighted_volume.hpp"

namespace wvol {

std::string_view status_name(MinimizationStatus status) {
  switch (status) {
    case MinimizationStatus::InteriorMin: return "interior_min";
    case MinimizationStatus::BoundaryLow: return "boundary_low";
    case MinimizationStatus::BoundaryHigh: return "boundary_high";
  }
  return "interior_min";
}

std::vector<Rational> log_spaced_grid(const Rational& c_min, const Rational& c_max, int points) {
  if (c_min <= 0) throw Error(ErrorKind::NonPositiveArgument, "c_min must be > 0");
  if (!(c_min < c_max)) throw Error(ErrorKind::InvalidInterval, "c_min must be < c_max");
  if (points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(points));
  grid.push_back(c_min);
  const double lo = std::log(c_min.get_d());
  const double step = (std::log(c_max.get_d()) - lo) / (points - 1);
  for (int i = 1; i + 1 < points; ++i) {
    Rational g = rational_from_double(std::exp(lo + step * i));
    if (g > grid.back() && g < c_max) grid.push_back(g);
  }
  grid.push_back(c_max);
  return grid;
}

namespace {

struct Bracket {
  Rational lo;
  Rational hi;
};

// Narrows [lo, hi] with G(lo) > 0 > G(hi) to width < tol.
Bracket bisect(const ExpPoly& g, Rational lo, Rational hi, const MinimizeConfig& cfg) {
  while (hi - lo >= cfg.tol) {
    Rational mid = (lo + hi) / 2;
    int s = certified_sign(g, mid, cfg.precision);
    if (s == 0) return {mid, mid};
    if (s > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

// Encloses min W on a bracket around a simple root c* of G. W(c*) <= W(mid);
// below, |W(c*) - W(mid)| <= |c* - mid| * e^{hi A} max|G| at the endpoints,
// G being monotone across the final bracket.
Interval minimum_enclosure(const ExpPoly& w, const ExpPoly& g, const Rational& a, const Bracket& br, long bits) {
  Rational mid = (br.lo + br.hi) / 2;
  Interval at_mid = w.eval(mid, bits);
  if (br.lo == br.hi) return at_mid;
  Interval g_lo = g.eval(br.lo, bits);
  Interval g_hi = g.eval(br.hi, bits);
  Rational g_max = std::max<Rational>(abs(g_lo.lower_rational()), abs(g_lo.upper_rational()));
  g_max = std::max({g_max, Rational(abs(g_hi.lower_rational())), Rational(abs(g_hi.upper_rational()))});
  Interval slack = Interval((br.hi - br.lo) / 2 * g_max, bits) * exp_rational(br.hi * a, bits);
  return Interval::hull(at_mid, Interval(at_mid.lower_rational() - slack.upper_rational(), at_mid.upper_rational(), bits));
}

void check_config(const MinimizeConfig& cfg) {
  if (cfg.c_min <= 0) throw Error(ErrorKind::NonPositiveArgument, "c_min must be > 0");
  if (!(cfg.c_min < cfg.c_max)) throw Error(ErrorKind::InvalidInterval, "c_min must be < c_max");
  if (cfg.grid_points < 2) throw Error(ErrorKind::InvalidArgument, "grid needs at least 2 points");
  if (cfg.tol <= 0) throw Error(ErrorKind::NonPositiveArgument, "tolerance must be > 0");
  if (cfg.precision < kMinPrecisionBits || cfg.precision > kMaxPrecisionBits) {
    throw Error(ErrorKind::InvalidArgument, "precision must lie in [53, 1024] bits");
  }
}

}  // namespace

MinimizationResult minimize_scaling(const ValuationProfile& vp, const MinimizeConfig& cfg) {
  check_config(cfg);
  const ExpPoly w = weighted_volume_fn(vp);
  const ExpPoly g = critical_fn(vp);
  const std::vector<Rational> grid = log_spaced_grid(cfg.c_min, cfg.c_max, cfg.grid_points);

  std::vector<int> signs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) signs[i] = certified_sign(g, grid[i], cfg.precision);

  MinimizationResult result{Interval(cfg.precision), Interval(cfg.precision), g, {}, 0, {}, {}};

  // Nearest nonzero sign on either side of index i; 0 if none.
  auto neighbour_sign = [&](std::size_t i, int dir) {
    for (long j = static_cast<long>(i) + dir; j >= 0 && j < static_cast<long>(grid.size()); j += dir) {
      if (signs[static_cast<std::size_t>(j)] != 0) return signs[static_cast<std::size_t>(j)];
    }
    return 0;
  };

  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++result.sign_changes;
    last = s;
  }

  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (signs[i] == 0) {
      if (neighbour_sign(i, -1) > 0 && neighbour_sign(i, +1) < 0) brackets.push_back({grid[i], grid[i]});
    } else if (signs[i] > 0 && i + 1 < grid.size() && signs[i + 1] < 0) {
      brackets.push_back(bisect(g, grid[i], grid[i + 1], cfg));
    }
  }

  for (const auto& br : brackets) {
    result.minima.push_back({br.lo, br.hi, minimum_enclosure(w, g, vp.log_discrepancy(), br, cfg.precision)});
  }

  if (!result.minima.empty()) {
    const CriticalPoint* best = &result.minima.front();
    for (const auto& m : result.minima) {
      // Strictly smaller beyond the tolerance; ties keep the smaller c.
      if (m.value.upper_rational() + cfg.tol < best->value.lower_rational()) best = &m;
    }
    result.status = MinimizationStatus::InteriorMin;
    result.bracket = {best->lo, best->hi};
    result.c_star = Interval(best->lo, best->hi, cfg.precision);
    result.w_star = best->value;
    return result;
  }

  Interval w_low = w.eval(cfg.c_min, cfg.precision);
  Interval w_high = w.eval(cfg.c_max, cfg.precision);
  const bool low_wins = w_low.midpoint_rational() <= w_high.midpoint_rational();
  const Rational& c = low_wins ? cfg.c_min : cfg.c_max;
  result.status = low_wins ? MinimizationStatus::BoundaryLow : MinimizationStatus::BoundaryHigh;
  result.bracket = {c, c};
  result.c_star = Interval(c, cfg.precision);
  result.w_star = low_wins ? w_low : w_high;
  return result;
}

}  // namespace wvol
