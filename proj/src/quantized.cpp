#include "wvol/quantized.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>

#include "wvol/error.hpp"

namespace wvol {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Integer lcm_of_denominators(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

std::vector<long> integer_weights(const MonomialGerm& g) {
  const Integer l = lcm_of_denominators(g.weights);
  std::vector<long> w;
  for (const auto& x : g.weights) {
    Rational scaled = x * l;
    if (!scaled.get_num().fits_slong_p()) throw Error(ErrorKind::OverflowGuard, "weight too large");
    w.push_back(scaled.get_num().get_si());
  }
  return w;
}

// Coefficients of prod_i 1 / (1 - x^{w_i}), extended one degree at a time.
class WeightedDegreeCounter {
 public:
  explicit WeightedDegreeCounter(std::vector<long> weights) : weights_(std::move(weights)), levels_(weights_.size()) {}

  // Count at the next degree d = 0, 1, 2, ...
  Integer next() {
    const long d = degree_++;
    Integer below = d == 0 ? 1 : 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      Integer c = below;
      if (d >= weights_[i]) c += levels_[i][static_cast<std::size_t>(d - weights_[i])];
      levels_[i].push_back(c);
      below = c;
    }
    return below;
  }

 private:
  std::vector<long> weights_;
  std::vector<std::vector<Integer>> levels_;
  long degree_ = 0;
};

void check_level(long level, const Rational& scaling) {
  if (level < 1) throw Error(ErrorKind::InvalidArgument, "level must be >= 1");
  if (scaling <= 0) throw Error(ErrorKind::NonPositiveArgument, "scaling must be > 0");
}

Interval normalization(const GermCountingModel& model, const Rational& scaling, long level, long bits) {
  Rational inv_power = Rational(1) / pow(Rational(level), static_cast<unsigned>(model.dimension()));
  return exp_rational(scaling * model.log_discrepancy(), bits) * Interval(inv_power, bits);
}

// sum_{k>=0} h(k) x^k with x = e^{-step}, h(k) <= C(k + shift + m, m).
Interval truncated_series(const std::function<Integer()>& next_count, const Rational& step, long shift, long m,
                          double tail_eps, long bits) {
  const Interval x = exp_rational(-step, bits);
  Interval power(Rational(1), bits);
  Interval sum(bits);
  constexpr long kCheckEvery = 16;
  for (long k = 0;; ++k) {
    sum = sum + Interval(Rational(next_count()), bits) * power;
    power = power * x;
    if ((k + 1) % kCheckEvery != 0) continue;
    const long next = k + 1;
    // rho = x (next + shift + m + 1) / (next + shift + 1) bounds the ratio of
    // consecutive majorant terms from index `next` on.
    Rational ratio(next + shift + m + 1, next + shift + 1);
    ratio.canonicalize();
    Interval rho = x * Interval(ratio, bits);
    if (!(rho.upper() < 1.0)) continue;
    Interval tail = Interval(Rational(binomial(next + shift + m, m)), bits) * power /
                    (Interval(Rational(1), bits) - rho);
    if (tail.upper() <= tail_eps * sum.lower()) {
      return Interval(sum.lower_rational(), sum.upper_rational() + tail.upper_rational(), bits);
    }
  }
}

Interval monomial_closed_form(const MonomialGerm& g, const Rational& scaling, long level, long bits) {
  Interval product(Rational(1), bits);
  const Interval one(Rational(1), bits);
  for (const auto& w : g.weights) product = product / (one - exp_rational(-scaling * w / level, bits));
  return product;
}

}  // namespace

GermCountingModel GermCountingModel::monomial_germ(std::vector<Rational> weights) {
  if (weights.empty()) throw Error(ErrorKind::InvalidDimension, "monomial germ needs at least one weight");
  for (const auto& w : weights) {
    if (w <= 0) throw Error(ErrorKind::NonPositiveArgument, "monomial weights must be > 0");
  }
  return GermCountingModel(MonomialGerm{std::move(weights)});
}

GermCountingModel GermCountingModel::hypersurface_cone(int n_vars, int degree) {
  if (degree < 2 || degree > n_vars) {
    throw Error(ErrorKind::InvalidDimension, "hypersurface cone needs 2 <= d <= n_vars");
  }
  return GermCountingModel(HypersurfaceCone{n_vars, degree});
}

GermCountingModel GermCountingModel::blowup_fibration(int n, int a) {
  if (n < 2) throw Error(ErrorKind::InvalidDimension, "blowup model needs n >= 2");
  if (a < 1) throw Error(ErrorKind::NonPositiveArgument, "blowup model needs a >= 1");
  return GermCountingModel(BlowupFibration{n, a});
}

std::string_view GermCountingModel::variant_name() const {
  return std::visit(Overloaded{[](const MonomialGerm&) { return std::string_view("monomial_germ"); },
                               [](const HypersurfaceCone&) { return std::string_view("hypersurface_cone"); },
                               [](const BlowupFibration&) { return std::string_view("blowup_fibration"); }},
                    variant_);
}

int GermCountingModel::dimension() const {
  return std::visit(Overloaded{[](const MonomialGerm& g) { return static_cast<int>(g.weights.size()); },
                               [](const HypersurfaceCone& h) { return h.n_vars - 1; },
                               [](const BlowupFibration& b) { return b.n; }},
                    variant_);
}

Rational GermCountingModel::log_discrepancy() const {
  return std::visit(
      Overloaded{[](const MonomialGerm& g) { return std::accumulate(g.weights.begin(), g.weights.end(), Rational(0)); },
                 [](const HypersurfaceCone& h) { return Rational(h.n_vars - h.degree); },
                 [](const BlowupFibration&) { return Rational(1); }},
      variant_);
}

Integer GermCountingModel::grade_unit_denominator() const {
  if (const auto* g = std::get_if<MonomialGerm>(&variant_)) return lcm_of_denominators(g->weights);
  return 1;
}

bool operator==(const GermCountingModel& a, const GermCountingModel& b) {
  if (a.variant_.index() != b.variant_.index()) return false;
  return std::visit(
      Overloaded{[&](const MonomialGerm& g) { return g.weights == std::get<MonomialGerm>(b.variant_).weights; },
                 [&](const HypersurfaceCone& h) {
                   const auto& o = std::get<HypersurfaceCone>(b.variant_);
                   return h.n_vars == o.n_vars && h.degree == o.degree;
                 },
                 [&](const BlowupFibration& f) {
                   const auto& o = std::get<BlowupFibration>(b.variant_);
                   return f.n == o.n && f.a == o.a;
                 }},
      a.variant_);
}

std::int64_t lattice_count(std::span<const Rational> weights, const Rational& s) {
  if (weights.empty()) throw Error(ErrorKind::InvalidDimension, "lattice count needs at least one weight");
  for (const auto& w : weights) {
    if (w <= 0) throw Error(ErrorKind::NonPositiveArgument, "weights must be > 0");
  }
  if (s < 0) throw Error(ErrorKind::NegativeArgument, "bound s must be >= 0");
  std::vector<Rational> all(weights.begin(), weights.end());
  all.push_back(s);
  const Integer l = lcm_of_denominators(all);
  std::vector<Integer> w;
  for (const auto& x : weights) w.push_back(Rational(x * l).get_num());
  const Integer bound = Rational(s * l).get_num();
  const Integer limit = Integer(std::numeric_limits<std::int64_t>::max());

  // Every lattice point floor(y) of a point y in the region stays in it, so the
  // simplex volume bound^n / (n! prod w) is a lower bound on the count.
  Rational volume(1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational factor(bound, w[i] * Integer(static_cast<long>(i + 1)));
    factor.canonicalize();
    volume *= factor;
  }
  if (volume > Rational(limit)) throw Error(ErrorKind::OverflowGuard, "lattice count exceeds 2^63 - 1");

  // Enumerate the first n-1 coordinates; the last one is counted in closed form.
  Integer total = 0;
  std::function<void(std::size_t, const Integer&)> walk = [&](std::size_t i, const Integer& remaining) {
    if (i + 1 == w.size()) {
      Integer c;
      mpz_cdiv_q(c.get_mpz_t(), remaining.get_mpz_t(), w[i].get_mpz_t());
      total += c;
      if (total > limit) throw Error(ErrorKind::OverflowGuard, "lattice count exceeds 2^63 - 1");
      return;
    }
    for (Integer r = remaining; r > 0; r -= w[i]) walk(i + 1, r);
  };
  walk(0, bound);
  return total.get_si();
}

Integer graded_dim(const GermCountingModel& model, long k) {
  if (k < 0) throw Error(ErrorKind::NegativeArgument, "degree must be >= 0");
  return std::visit(Overloaded{[k](const MonomialGerm& g) {
                                 WeightedDegreeCounter counter(integer_weights(g));
                                 Integer c;
                                 for (long d = 0; d <= k; ++d) c = counter.next();
                                 return c;
                               },
                               [k](const HypersurfaceCone& h) {
                                 return Integer(binomial(k + h.n_vars - 1, h.n_vars - 1) -
                                                binomial(k - h.degree + h.n_vars - 1, h.n_vars - 1));
                               },
                               [k](const BlowupFibration& b) { return binomial(k + b.n - 1, b.n - 1); }},
                    model.variant());
}

Interval quantized_sum_truncated(const GermCountingModel& model, const Rational& scaling, long level,
                                 double tail_eps, long bits) {
  check_level(level, scaling);
  const Interval norm = normalization(model, scaling, level, bits);
  Interval series = std::visit(
      Overloaded{[&](const MonomialGerm& g) {
                   auto counter = std::make_shared<WeightedDegreeCounter>(integer_weights(g));
                   const Rational step = scaling / (Rational(model.grade_unit_denominator()) * level);
                   const long m = static_cast<long>(g.weights.size());
                   return truncated_series([counter] { return counter->next(); }, step, 0, m, tail_eps, bits);
                 },
                 [&](const HypersurfaceCone& h) {
                   auto k = std::make_shared<long>(0);
                   auto next = [k, h] {
                     long d = (*k)++;
                     return Integer(binomial(d + h.n_vars - 1, h.n_vars - 1) -
                                    binomial(d - h.degree + h.n_vars - 1, h.n_vars - 1));
                   };
                   return truncated_series(next, scaling / level, 0, h.n_vars - 1, tail_eps, bits);
                 },
                 [&](const BlowupFibration& b) {
                   // Reindex by j = k - a l >= 0, the valuation of a degree-k monomial.
                   const long shift = static_cast<long>(b.a) * level;
                   auto j = std::make_shared<long>(0);
                   auto next = [j, shift, b] { return binomial((*j)++ + shift + b.n - 1, b.n - 1); };
                   return truncated_series(next, scaling / level, shift, b.n - 1, tail_eps, bits);
                 }},
      model.variant());
  return norm * series;
}

Interval quantized_weighted_volume(const GermCountingModel& model, const Rational& scaling, long level,
                                   double tail_eps, long bits) {
  if (const auto* g = std::get_if<MonomialGerm>(&model.variant())) {
    check_level(level, scaling);
    return normalization(model, scaling, level, bits) * monomial_closed_form(*g, scaling, level, bits);
  }
  return quantized_sum_truncated(model, scaling, level, tail_eps, bits);
}

ValuationProfile exact_profile(const GermCountingModel& model) {
  return std::visit(Overloaded{[&](const MonomialGerm& g) {
                                 Rational prod = 1;
                                 for (const auto& w : g.weights) prod *= w;
                                 return germ_profile(model.dimension(), model.log_discrepancy(), 1 / prod);
                               },
                               [&](const HypersurfaceCone& h) {
                                 return germ_profile(model.dimension(), model.log_discrepancy(), h.degree);
                               },
                               [](const BlowupFibration& b) { return blowup_point_profile(b.n, b.a); }},
                    model.variant());
}

std::vector<ConvergenceRow> convergence_study(const GermCountingModel& model, const Rational& scaling,
                                              std::span<const long> levels, double tail_eps, long bits) {
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i] <= levels[i - 1]) throw Error(ErrorKind::InvalidArgument, "levels must be ascending");
  }
  const Interval exact = weighted_volume_at(exact_profile(model), scaling, bits);
  std::vector<ConvergenceRow> rows;
  for (long level : levels) {
    Interval value = quantized_weighted_volume(model, scaling, level, tail_eps, bits);
    const double err = std::fabs(value.midpoint() - exact.midpoint());
    std::optional<double> ratio;
    if (!rows.empty() && rows.back().abs_err > 0.0) ratio = err / rows.back().abs_err;
    rows.push_back({level, std::move(value), exact, err, ratio});
  }
  return rows;
}

}  // namespace wvol
