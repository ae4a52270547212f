#include "wvol/roots.hpp"

#include <algorithm>
#include <array>

#include "wvol/error.hpp"

namespace wvol {

namespace {

class SturmChain {
 public:
  explicit SturmChain(const Polynomial& square_free) {
    chain_.push_back(square_free);
    chain_.push_back(square_free.derivative());
    while (!chain_.back().is_zero()) {
      Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(-r);
    }
    if (chain_.back().is_zero()) chain_.pop_back();
  }

  int variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& s : chain_) {
      int sg = sign(s(x));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  }

  // Valid when neither endpoint is a root.
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<Polynomial> chain_;
};

// Strips exact roots at the given points from a square-free polynomial.
Polynomial remove_roots_at(Polynomial q, std::initializer_list<Rational> points) {
  for (const auto& x : points) {
    if (!q.is_zero() && q.degree() > 0 && q(x) == 0) {
      q = divmod(q, Polynomial({-x, 1})).first;
    }
  }
  return q;
}

// A point strictly inside (lo, hi) that is not a root of q.
Rational split_point(const Polynomial& q, const Rational& lo, const Rational& hi) {
  static constexpr std::array<std::pair<int, int>, 8> kFractions{
      {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5}, {3, 5}, {3, 7}}};
  const Rational width = hi - lo;
  for (auto [num, den] : kFractions) {
    Rational m = lo + width * Rational(num, den);
    if (q(m) != 0) return m;
  }
  // deg q roots at most, so some 1/2^k offset is eventually root-free.
  Rational step = width / 16;
  for (;;) {
    Rational m = lo + step;
    if (q(m) != 0) return m;
    step /= 2;
  }
}

struct Isolator {
  const Polynomial& q;
  const SturmChain& sturm;
  const Rational& a;
  const Rational& b;
  std::vector<RootEnclosure>& out;

  void run(const Rational& lo, const Rational& hi, int n) {
    if (n == 0) return;
    if (n == 1 && lo != a && hi != b) {
      out.push_back({lo, hi});
      return;
    }
    Rational m = split_point(q, lo, hi);
    int left = sturm.count(lo, m);
    run(lo, m, left);
    run(m, hi, n - left);
  }
};

struct Prepared {
  Polynomial q;
  bool constant = false;
};

Prepared prepare(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root isolation of the zero polynomial");
  if (!(a < b)) throw Error(ErrorKind::InvalidInterval, "empty root search interval");
  Polynomial q = remove_roots_at(square_free_part(p), {a, b});
  return {q, q.degree() <= 0};
}

}  // namespace

Rational root_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "root bound of the zero polynomial");
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Polynomial::constant(1);
  Polynomial g = gcd(p, p.derivative());
  Polynomial q = divmod(p, g).first;
  return q * (Rational(1) / q.leading());
}

int count_distinct_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  Prepared prep = prepare(p, a, b);
  if (prep.constant) return 0;
  return SturmChain(prep.q).count(a, b);
}

std::vector<RootEnclosure> isolate_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  Prepared prep = prepare(p, a, b);
  std::vector<RootEnclosure> roots;
  if (prep.constant) return roots;
  SturmChain sturm(prep.q);
  Isolator{prep.q, sturm, a, b, roots}.run(a, b, sturm.count(a, b));
  return roots;
}

bool is_nonnegative_on(const Polynomial& p, const Rational& a, const std::optional<Rational>& b) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) return p.leading() > 0;
  Rational hi;
  if (b) {
    hi = *b;
  } else {
    if (p.leading() < 0) return false;
    Rational bound = root_bound(p);
    hi = std::max(a, bound) + 1;
  }
  if (p(a) < 0 || p(hi) < 0) return false;
  auto roots = isolate_real_roots(p, a, hi);
  // p has constant sign between consecutive distinct roots; one sample per gap.
  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back((a + hi) / 2);
  } else {
    samples.push_back(roots.front().lo);
    for (const auto& r : roots) samples.push_back(r.hi);
  }
  return std::all_of(samples.begin(), samples.end(), [&](const Rational& s) { return p(s) > 0; });
}

}  // namespace wvol
