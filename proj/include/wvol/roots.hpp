#pragma once

#include <optional>
#include <vector>

#include "wvol/polynomial.hpp"

namespace wvol {

/// An open rational interval (lo, hi) holding exactly one distinct real root.
/// Neither endpoint is a root.
struct RootEnclosure {
  Rational lo;
  Rational hi;
};

/// Cauchy bound: every real root has |x| < root_bound(p). p must be nonzero.
Rational root_bound(const Polynomial& p);

/// Square-free part p / gcd(p, p'), monic.
Polynomial square_free_part(const Polynomial& p);

/// Number of distinct real roots in the open interval (a, b).
int count_distinct_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// Isolates the distinct real roots of p in the open interval (a, b), in
/// ascending order. Enclosures are disjoint and strictly inside (a, b).
std::vector<RootEnclosure> isolate_real_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// Certifies p >= 0 on [a, b], or on [a, inf) when b is empty.
bool is_nonnegative_on(const Polynomial& p, const Rational& a, const std::optional<Rational>& b);

}  // namespace wvol
