#include "wvol/piecewise.hpp"

#include <algorithm>
#include <iterator>

#include "wvol/error.hpp"
#include "wvol/roots.hpp"

namespace wvol {

PiecewisePolynomial::PiecewisePolynomial(Polynomial everywhere)
    : breakpoints_{Rational(0)}, pieces_{std::move(everywhere)} {}

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> bounded_pieces,
                                         Polynomial tail)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(bounded_pieces)) {
  if (breakpoints_.empty() || breakpoints_.front() != 0) {
    throw Error(ErrorKind::InvalidProfile, "breakpoints must start at 0");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw Error(ErrorKind::InvalidProfile, "breakpoints must be strictly increasing");
    }
  }
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw Error(ErrorKind::InvalidProfile, "expected " + std::to_string(breakpoints_.size() - 1) +
                                               " bounded pieces, got " + std::to_string(pieces_.size()));
  }
  pieces_.push_back(std::move(tail));
}

std::optional<Rational> PiecewisePolynomial::piece_end(std::size_t i) const {
  if (i + 1 >= pieces_.size()) return std::nullopt;
  return breakpoints_.at(i + 1);
}

bool PiecewisePolynomial::is_zero() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t PiecewisePolynomial::piece_index(const Rational& y) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), y);
  return static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1;
}

Rational PiecewisePolynomial::operator()(const Rational& y) const {
  if (y < 0) throw Error(ErrorKind::NegativeArgument, "profile evaluated at y < 0");
  return pieces_[piece_index(y)](y);
}

double PiecewisePolynomial::operator()(double y) const {
  std::size_t i = 0;
  while (i + 1 < breakpoints_.size() && breakpoints_[i + 1].get_d() <= y) ++i;
  return pieces_[i](y);
}

PiecewisePolynomial PiecewisePolynomial::operator*(const Polynomial& q) const {
  PiecewisePolynomial r = *this;
  for (auto& p : r.pieces_) p = p * q;
  return r;
}

PiecewisePolynomial PiecewisePolynomial::operator*(const Rational& s) const {
  PiecewisePolynomial r = *this;
  for (auto& p : r.pieces_) p *= s;
  return r;
}

PiecewisePolynomial PiecewisePolynomial::refined(const std::vector<Rational>& breakpoints) const {
  if (!std::includes(breakpoints.begin(), breakpoints.end(), breakpoints_.begin(), breakpoints_.end())) {
    throw Error(ErrorKind::InvalidArgument, "refinement must contain the existing breakpoints");
  }
  PiecewisePolynomial r;
  r.breakpoints_ = breakpoints;
  r.pieces_.clear();
  for (const auto& b : breakpoints) r.pieces_.push_back(pieces_[piece_index(b)]);
  return r;
}

PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  std::vector<Rational> merged;
  std::set_union(a.breakpoints_.begin(), a.breakpoints_.end(), b.breakpoints_.begin(), b.breakpoints_.end(),
                 std::back_inserter(merged));
  PiecewisePolynomial ra = a.refined(merged);
  PiecewisePolynomial rb = b.refined(merged);
  for (std::size_t i = 0; i < ra.pieces_.size(); ++i) ra.pieces_[i] += rb.pieces_[i];
  return ra;
}

Rational PiecewisePolynomial::integrate(const Rational& s1, const Rational& s2) const {
  if (s1 < 0 || s2 < s1) throw Error(ErrorKind::InvalidInterval, "integration window must satisfy 0 <= s1 <= s2");
  Rational total = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Rational lo = std::max(s1, breakpoints_[i]);
    Rational hi = s2;
    if (auto end = piece_end(i)) hi = std::min(hi, *end);
    if (lo < hi) total += pieces_[i].integrate(lo, hi);
  }
  return total;
}

PiecewiseProfile::PiecewiseProfile(PiecewisePolynomial density, bool allow_discontinuous)
    : density_(std::move(density)), allow_discontinuous_(allow_discontinuous) {
  if (density_.tail().leading() < 0) {
    throw Error(ErrorKind::InvalidProfile, "tail has a negative leading coefficient");
  }
  for (std::size_t i = 0; i < density_.piece_count(); ++i) {
    if (!is_nonnegative_on(density_.piece(i), density_.piece_begin(i), density_.piece_end(i))) {
      throw Error(ErrorKind::InvalidProfile, "piece " + std::to_string(i) + " starting at " +
                                                 to_string(density_.piece_begin(i)) + " takes negative values");
    }
  }
  for (std::size_t i = 1; i < density_.piece_count(); ++i) {
    const Rational& t = density_.piece_begin(i);
    if (density_.piece(i - 1)(t) != density_.piece(i)(t)) discontinuities_.push_back(t);
  }
}

PiecewiseProfile::PiecewiseProfile(std::vector<Rational> breakpoints, std::vector<Polynomial> bounded_pieces,
                                   Polynomial tail, bool allow_discontinuous)
    : PiecewiseProfile(PiecewisePolynomial(std::move(breakpoints), std::move(bounded_pieces), std::move(tail)),
                       allow_discontinuous) {}

PiecewiseProfile PiecewiseProfile::polynomial(Polynomial p) { return PiecewiseProfile(PiecewisePolynomial(std::move(p))); }

std::vector<std::string> PiecewiseProfile::warnings() const {
  std::vector<std::string> w;
  if (allow_discontinuous_) return w;
  for (const auto& t : discontinuities_) w.push_back("profile is discontinuous at y = " + to_string(t));
  return w;
}

PiecewiseProfile PiecewiseProfile::scaled(const Rational& s) const {
  if (s <= 0) throw Error(ErrorKind::NonPositiveArgument, "profile scale must be > 0");
  return PiecewiseProfile(density_ * s, allow_discontinuous_);
}

}  // namespace wvol
