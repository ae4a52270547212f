#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wvol/polynomial.hpp"

namespace wvol {

/// Piecewise polynomial on [0, inf): breakpoints 0 = t_0 < t_1 < ... < t_m,
/// bounded piece i on [t_{i-1}, t_i] for i = 1..m, and a tail on [t_m, inf).
/// Pieces are polynomials in the global variable y (not shifted per piece).
/// No sign condition; see PiecewiseProfile for the validated density.
class PiecewisePolynomial {
 public:
  /// The zero function on [0, inf).
  PiecewisePolynomial() : breakpoints_{Rational(0)}, pieces_(1) {}
  /// A single polynomial on all of [0, inf).
  explicit PiecewisePolynomial(Polynomial everywhere);
  /// Throws InvalidProfile on malformed breakpoints or a piece count mismatch.
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> bounded_pieces, Polynomial tail);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  std::span<const Polynomial> bounded_pieces() const { return {pieces_.data(), pieces_.size() - 1}; }
  const Polynomial& tail() const { return pieces_.back(); }

  /// Bounded pieces followed by the tail.
  std::size_t piece_count() const { return pieces_.size(); }
  const Polynomial& piece(std::size_t i) const { return pieces_.at(i); }
  const Rational& piece_begin(std::size_t i) const { return breakpoints_.at(i); }
  /// Empty for the tail.
  std::optional<Rational> piece_end(std::size_t i) const;

  bool is_zero() const;

  /// Value at y >= 0, taking the right-hand piece at a breakpoint.
  Rational operator()(const Rational& y) const;
  double operator()(double y) const;

  /// Each piece multiplied by q.
  PiecewisePolynomial operator*(const Polynomial& q) const;
  PiecewisePolynomial operator*(const Rational& s) const;
  /// Pointwise sum over the common refinement of both breakpoint sets.
  friend PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
  friend bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    return a.breakpoints_ == b.breakpoints_ && a.pieces_ == b.pieces_;
  }

  /// Same function on a finer breakpoint set (must contain the current one).
  PiecewisePolynomial refined(const std::vector<Rational>& breakpoints) const;

  /// Exact integral over [s1, s2], 0 <= s1 <= s2 finite.
  Rational integrate(const Rational& s1, const Rational& s2) const;

 private:
  std::size_t piece_index(const Rational& y) const;

  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

/// A restricted-volume density: a PiecewisePolynomial certified to be
/// non-negative on every piece, with a tail whose leading coefficient is
/// non-negative. Discontinuities at breakpoints are recorded as warnings
/// unless allow_discontinuous is set.
class PiecewiseProfile {
 public:
  /// Throws InvalidProfile when a piece is negative somewhere on its interval.
  explicit PiecewiseProfile(PiecewisePolynomial density, bool allow_discontinuous = false);
  PiecewiseProfile(std::vector<Rational> breakpoints, std::vector<Polynomial> bounded_pieces, Polynomial tail,
                   bool allow_discontinuous = false);
  /// R(y) = p(y) on [0, inf).
  static PiecewiseProfile polynomial(Polynomial p);

  const PiecewisePolynomial& density() const { return density_; }
  const std::vector<Rational>& breakpoints() const { return density_.breakpoints(); }
  std::span<const Polynomial> bounded_pieces() const { return density_.bounded_pieces(); }
  const Polynomial& tail() const { return density_.tail(); }
  bool allow_discontinuous() const { return allow_discontinuous_; }
  bool is_zero() const { return density_.is_zero(); }
  bool is_continuous() const { return discontinuities_.empty(); }
  /// Breakpoints where the two adjacent pieces disagree.
  const std::vector<Rational>& discontinuities() const { return discontinuities_; }
  /// Human-readable warnings (empty when continuous or when discontinuities are allowed).
  std::vector<std::string> warnings() const;

  Rational operator()(const Rational& y) const { return density_(y); }
  double operator()(double y) const { return density_(y); }

  /// s * R for s > 0.
  PiecewiseProfile scaled(const Rational& s) const;

  friend bool operator==(const PiecewiseProfile& a, const PiecewiseProfile& b) {
    return a.density_ == b.density_ && a.allow_discontinuous_ == b.allow_discontinuous_;
  }

 private:
  PiecewisePolynomial density_;
  bool allow_discontinuous_ = false;
  std::vector<Rational> discontinuities_;
};

}  // namespace wvol
