#include "wvol/interval.hpp"

#include <algorithm>
#include <utility>

#include "wvol/error.hpp"

namespace wvol {

namespace {

// Scoped MPFR temporary.
class Scratch {
 public:
  explicit Scratch(long bits) { mpfr_init2(v_, bits); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  ~Scratch() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

long joint_precision(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

void check_bits(long bits) {
  if (bits < kMinPrecisionBits) {
    throw Error(ErrorKind::InvalidArgument, "precision must be at least 53 bits, got " + std::to_string(bits));
  }
}

}  // namespace

Interval::Interval(long bits) {
  check_bits(bits);
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, long bits) : Interval(bits) {
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi, long bits) : Interval(bits) {
  if (lo > hi) throw Error(ErrorKind::InvalidInterval, "interval lower endpoint exceeds upper");
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint() const {
  Scratch m(precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  return mpfr_get_d(m, MPFR_RNDN);
}

double Interval::width() const {
  Scratch w(precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w, MPFR_RNDU);
}

Rational Interval::lower_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

Rational Interval::upper_rational() const {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

Rational Interval::midpoint_rational() const { return (lower_rational() + upper_rational()) / 2; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(double x) const { return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0; }

bool Interval::contains(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const long bits = joint_precision(a, b);
  Interval r(bits);
  Scratch t(bits);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t.get(), MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw Error(ErrorKind::InvalidArgument, "interval division by an interval containing zero");
  }
  const long bits = joint_precision(a, b);
  Interval r(bits);
  Scratch t(bits);
  mpfr_srcptr xs[2] = {a.lo_, a.hi_};
  mpfr_srcptr ys[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t.get(), MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(joint_precision(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, long bits) {
  Interval r(bits);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval exp_rational(const Rational& q, long bits) {
  check_bits(bits);
  if (q == 0) return Interval(Rational(1), bits);
  if (q < 0) {
    Interval pos = exp_rational(-q, bits);
    return Interval(Rational(1), bits) / pos;
  }

  // Halve until x = q / 2^k <= 1/2.
  unsigned long k = 0;
  Rational x = q;
  while (x > Rational(1, 2)) {
    x /= 2;
    ++k;
  }
  const long wp = bits + static_cast<long>(k) + 32;

  Scratch xl(wp), xu(wp), term_l(wp), term_u(wp), sum_l(wp), sum_u(wp), eps(wp);
  mpfr_set_q(xl, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(xu, x.get_mpq_t(), MPFR_RNDU);
  mpfr_set_ui(term_l, 1, MPFR_RNDN);
  mpfr_set_ui(term_u, 1, MPFR_RNDN);
  mpfr_set_ui(sum_l, 1, MPFR_RNDN);
  mpfr_set_ui(sum_u, 1, MPFR_RNDN);
  mpfr_set_ui_2exp(eps, 1, -(wp + 2), MPFR_RNDN);

  unsigned long j = 0;
  if (mpfr_sgn(xu.get()) > 0) {
    do {
      ++j;
      mpfr_mul(term_l, term_l, xl, MPFR_RNDD);
      mpfr_div_ui(term_l, term_l, j, MPFR_RNDD);
      mpfr_mul(term_u, term_u, xu, MPFR_RNDU);
      mpfr_div_ui(term_u, term_u, j, MPFR_RNDU);
      mpfr_add(sum_l, sum_l, term_l, MPFR_RNDD);
      mpfr_add(sum_u, sum_u, term_u, MPFR_RNDU);
    } while (mpfr_greater_p(term_u, eps));
    // Tail after term j: sum_{i>j} x^i/i! <= term_j * x/(j+1) * 1/(1 - x/(j+2)) <= 2 term_j x/(j+1).
    mpfr_mul(term_u, term_u, xu, MPFR_RNDU);
    mpfr_div_ui(term_u, term_u, j + 1, MPFR_RNDU);
    mpfr_mul_2ui(term_u, term_u, 1, MPFR_RNDU);
    mpfr_add(sum_u, sum_u, term_u, MPFR_RNDU);
  }

  for (unsigned long i = 0; i < k; ++i) {
    mpfr_sqr(sum_l, sum_l, MPFR_RNDD);
    mpfr_sqr(sum_u, sum_u, MPFR_RNDU);
  }

  return Interval::from_endpoints(sum_l, sum_u, bits);
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw Error(ErrorKind::NonPositiveArgument, "logarithm of an interval not strictly positive");
  Interval r(x.precision());
  mpfr_log(r.lo_, x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_, x.hi(), MPFR_RNDU);
  return r;
}

}  // namespace wvol
