#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wvol/catalog.hpp"
#include "wvol/error.hpp"
#include "wvol/profile_calculus.hpp"
#include "wvol/roots.hpp"
#include "wvol/weighted_volume.hpp"

using namespace wvol;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return Polynomial(std::move(cs));
}

LaurentPolynomial laurent(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p += LaurentPolynomial::monomial(Rational(c), e);
  return p;
}

const ValuationProfile& profile(const char* key) { return catalog_entry(key).profiles.front(); }

std::vector<const ValuationProfile*> catalog_profiles() {
  std::vector<const ValuationProfile*> out;
  for (const auto& key : catalog_list()) {
    for (const auto& vp : catalog_entry(key).profiles) out.push_back(&vp);
  }
  return out;
}

bool certified_le(const Interval& a, const Interval& b) { return a.upper_rational() <= b.lower_rational(); }

const double kE = std::exp(1.0);

}  // namespace

TEST_SUITE("weighted_volume") {
  TEST_CASE("weighted volume function examples") {
    CHECK(weighted_volume_fn(profile("castelnuovo_a2")) ==
          ExpPoly::from_laurent(laurent({{-1, 1}, {-2, 1}}), Rational(1)));
    CHECK(weighted_volume_fn(profile("p1_x_a1")) == ExpPoly::from_laurent(laurent({{-1, 2}}), Rational(1)));
    const ValuationProfile germ1 = germ_profile(1, Rational(1), Rational(1));
    CHECK(weighted_volume_fn(germ1) == ExpPoly::from_laurent(laurent({{-1, 1}}), Rational(1)));
    MinimizationResult r = minimize_scaling(germ1);
    CHECK(r.c_star.contains(Rational(1)));
    CHECK(oracle::near(r.w_star, kE));
  }

  TEST_CASE("weighted volume evaluation examples") {
    CHECK(oracle::near(weighted_volume_at(profile("castelnuovo_a2"), Rational(1)), 2 * kE));
    Interval exc = weighted_volume_at(profile("ruled_surface_bccd_exceptional"), Rational(1));
    CHECK(std::fabs(exc.midpoint() - (2 * kE - 1)) < 1e-14);
    const Rational c(16, 25);
    Interval sing = weighted_volume_at(profile("ruled_surface_bccd_singular"), c);
    const double cd = c.get_d();
    const double displayed = ((std::exp(2 * cd) - (cd + 1) * std::exp(cd)) / cd + std::exp(cd)) / cd;
    CHECK(std::fabs(sing.midpoint() - displayed) < 1e-12);
    CHECK(std::fabs(sing.midpoint() - 4.1508) < 1e-3);
    CHECK_THROWS_AS(weighted_volume_at(profile("castelnuovo_a2"), Rational(0)), Error);
  }

  TEST_CASE("critical function examples") {
    CHECK(critical_fn(profile("castelnuovo_a2")) == ExpPoly::from_laurent(laurent({{-3, 2}, {-1, -1}})));
    CHECK(critical_fn(profile("p1_x_a1")) == ExpPoly::from_laurent(laurent({{-2, 2}, {-1, -2}})));
    CHECK(critical_fn(germ_profile(3, Rational(3), Rational(1))) ==
          ExpPoly::from_laurent(laurent({{-4, 3}, {-3, -3}})));
    CHECK(critical_fn(blowup_point_profile(2, Rational(2))) ==
          ExpPoly::from_laurent(laurent({{-3, 2}, {-2, 1}, {-1, -2}})));
  }

  TEST_CASE("W' + e^{cA} G is the zero exponential polynomial on catalog profiles") {
    for (const auto* vp : catalog_profiles()) {
      CAPTURE(vp->name());
      const ExpPoly sum =
          weighted_volume_fn(*vp).derivative() + ExpPoly::exponential(vp->log_discrepancy()) * critical_fn(*vp);
      CHECK(sum.is_zero());
    }
  }

  TEST_CASE("minimization examples") {
    MinimizationResult cast = minimize_scaling(profile("castelnuovo_a2"));
    CHECK(cast.status == MinimizationStatus::InteriorMin);
    CHECK(std::fabs(cast.c_star.midpoint() - std::sqrt(2.0)) < 1e-9);
    CHECK(cast.w_star.lower() > 4.9651 - 1e-3);
    CHECK(cast.w_star.upper() < 4.9651 + 1e-3);

    MinimizationResult exc = minimize_scaling(profile("ruled_surface_bccd_exceptional"));
    CHECK(exc.c_star.lower() >= 1.16);
    CHECK(exc.c_star.upper() <= 1.19);
    CHECK(std::fabs(exc.w_star.midpoint() - 4.377) < 1e-3);

    MinimizationResult sing = minimize_scaling(profile("ruled_surface_bccd_singular"));
    CHECK(sing.c_star.lower() >= 0.63);
    CHECK(sing.c_star.upper() <= 0.67);
    CHECK(std::fabs(sing.w_star.midpoint() - 4.1507) < 1e-3);
  }

  TEST_CASE("minimization result invariants on catalog profiles") {
    for (const auto* vp : catalog_profiles()) {
      CAPTURE(vp->name());
      MinimizationResult r = minimize_scaling(*vp);
      REQUIRE(r.status == MinimizationStatus::InteriorMin);
      CHECK(r.critical == critical_fn(*vp));
      CHECK(certified_sign(r.critical, r.bracket.first) == 1);
      CHECK(certified_sign(r.critical, r.bracket.second) == -1);
      CHECK(r.w_star.contains(weighted_volume_at(*vp, r.c_star.midpoint_rational())));
      CHECK(r.c_star.width() < 1e-11);
    }
  }

  TEST_CASE("minimizers agree with an independent quadrature and TOMS 748 oracle") {
    for (const auto& d : oracle::catalog_densities()) {
      CAPTURE(d.name);
      MinimizationResult r = minimize_scaling(profile(d.name.c_str()));
      const double c = r.c_star.midpoint();
      const auto root = oracle::critical_root(d, c * 0.9L, c * 1.1L);
      CHECK(std::fabs(static_cast<double>(root) - c) < 1e-9);
      CHECK(std::fabs(static_cast<double>(oracle::weighted_volume(d, root)) - r.w_star.midpoint()) <
            1e-9 * r.w_star.midpoint());
    }
  }

  TEST_CASE("boundary minima and configuration errors") {
    const auto& vp = profile("castelnuovo_a2");
    MinimizeConfig high;
    high.c_min = Rational(1, 10);
    high.c_max = Rational(1);
    CHECK(minimize_scaling(vp, high).status == MinimizationStatus::BoundaryHigh);
    MinimizeConfig low;
    low.c_min = Rational(2);
    low.c_max = Rational(5);
    MinimizationResult r = minimize_scaling(vp, low);
    CHECK(r.status == MinimizationStatus::BoundaryLow);
    CHECK(r.c_star.contains(Rational(2)));
    MinimizeConfig bad;
    bad.c_min = Rational(3);
    bad.c_max = Rational(2);
    CHECK_THROWS_AS(minimize_scaling(vp, bad), Error);
    bad = MinimizeConfig{};
    bad.grid_points = 1;
    CHECK_THROWS_AS(minimize_scaling(vp, bad), Error);
  }

  TEST_CASE("profile validation errors") {
    auto expect_kind = [](ErrorKind kind, auto&& f) {
      try {
        f();
        FAIL("no error thrown");
      } catch (const Error& e) {
        CHECK(e.kind() == kind);
      }
    };
    const auto one = PiecewiseProfile::polynomial(poly({1}));
    expect_kind(ErrorKind::InvalidDimension, [&] { ValuationProfile("x", 0, Rational(1), one); });
    expect_kind(ErrorKind::NonPositiveArgument, [&] { ValuationProfile("x", 1, Rational(0), one); });
    expect_kind(ErrorKind::EmptyProfile,
                [&] { ValuationProfile("x", 1, Rational(1), PiecewiseProfile::polynomial(Polynomial())); });
  }

  TEST_CASE("blowup point profiles") {
    CHECK(weighted_volume_fn(blowup_point_profile(2, Rational(1))) == weighted_volume_fn(profile("castelnuovo_a2")));
    const ValuationProfile div = blowup_point_profile(3, Rational(2));
    CHECK(weighted_volume_fn(div) == ExpPoly::from_laurent(laurent({{-1, 2}, {-2, 2}, {-3, 1}}), Rational(1)));
    MinimizationResult r = minimize_scaling(div);
    // 2c^3 - 3c - 3 changes sign across the certified bracket.
    const Polynomial cubic = poly({-3, -3, 0, 2});
    CHECK(cubic(r.bracket.first) < 0);
    CHECK(cubic(r.bracket.second) > 0);
    CHECK(std::fabs(r.w_star.midpoint() - 11.27) < 5e-3);

    const oracle::Density d{"blowup_n2_a2", 1, {}, [](oracle::Real y) { return 2 + y; }};
    MinimizationResult r22 = minimize_scaling(blowup_point_profile(2, Rational(2)));
    CHECK(std::fabs(static_cast<double>(oracle::critical_root(d, 1, 2)) - r22.c_star.midpoint()) < 1e-9);
    CHECK_THROWS_AS(blowup_point_profile(1, Rational(1)), Error);
    CHECK_THROWS_AS(blowup_point_profile(2, Rational(0)), Error);
  }

  TEST_CASE("germ closed forms") {
    GermMinimum smooth2 = germ_minimum(2, Rational(2), Rational(1));
    CHECK(smooth2.c_star == 1);
    CHECK(std::fabs(smooth2.w_star.approx() - 7.389056) < 1e-6);
    CHECK(std::fabs(germ_minimum(3, Rational(3), Rational(1)).w_star.approx() - 20.08554) < 1e-5);
    CHECK(std::fabs(germ_minimum(2, Rational(1), Rational(2)).w_star.approx() - 3.69453) < 1e-5);
    CHECK(std::fabs(germ_minimum(3, Rational(2), Rational(2)).w_star.approx() - 11.90254) < 1e-5);
    CHECK(std::fabs(normalized_volume_bridge(2, Rational(4)).approx() - 7.38906) < 1e-5);
    CHECK(std::fabs(normalized_volume_bridge(3, Rational(16)).approx() - 11.90254) < 1e-5);
    CHECK(oracle::near(normalized_volume_bridge(1, Rational(1)).value(), kE));
  }

  TEST_CASE("germ closed form matches numeric minimization (property)") {
    oracle::Gen g(0x5eed0201);
    for (int i = 0; i < 20; ++i) {
      const int n = static_cast<int>(g.integer(1, 6));
      const Rational a = g.positive_rational(8, 3);
      const Rational v = g.positive_rational(9, 4);
      GermMinimum closed = germ_minimum(n, a, v);
      MinimizationResult r = minimize_scaling(germ_profile(n, a, v));
      CAPTURE(n);
      CAPTURE(to_string(a));
      CHECK(closed.c_star == Rational(n) / a);
      CHECK(std::fabs(r.c_star.midpoint() - closed.c_star.get_d()) < 1e-9);
      CHECK(r.w_star.overlaps(closed.w_star.value()));
    }
  }

  TEST_CASE("pullback and compact closed forms") {
    ValuationProfile base("a1_germ", 1, Rational(1), PiecewiseProfile::polynomial(poly({1})));
    ValuationProfile pulled = pullback_profile(base, Rational(2), 2);
    CHECK(pulled.profile() == PiecewiseProfile::polynomial(poly({2})));
    CHECK(oracle::near(minimize_scaling(pulled).w_star, 2 * kE));
    CHECK(pullback_profile(base, Rational(1), 1).profile() == base.profile());

    ValuationProfile odp = germ_profile(2, Rational(1), Rational(2));
    MinimizationResult base_min = minimize_scaling(odp);
    MinimizationResult pulled_min = minimize_scaling(pullback_profile(odp, Rational(2), 3));
    CHECK(pulled_min.bracket == base_min.bracket);
    CHECK(std::fabs(pulled_min.w_star.midpoint() - 2 * base_min.w_star.midpoint()) < 1e-12);

    CHECK(compact_fano_wv(2, Rational(8)) == 4);
    CHECK(compact_fano_wv(1, Rational(2)) == 2);
    CHECK(compact_fano_wv(2, Rational(18)) == 9);
    CHECK(compact_fano_wv(2, Rational(9)) == Rational(9, 2));
  }

  TEST_CASE("mass scaling leaves the minimizer bracket unchanged (property)") {
    oracle::Gen g(0x5eed0202);
    for (const auto* vp : catalog_profiles()) {
      const Rational s = g.positive_rational(9, 5);
      ValuationProfile scaled(vp->name(), vp->dim(), vp->log_discrepancy(), vp->profile().scaled(s));
      CHECK(weighted_volume_fn(scaled) == weighted_volume_fn(*vp) * s);
      CHECK(minimize_scaling(scaled).bracket == minimize_scaling(*vp).bracket);
    }
  }

  TEST_CASE("monotonicity in the density") {
    // 1 + min(y, 1) lies below both 1 + y and 2, all with A = 1.
    const auto& lower = profile("ruled_surface_bccd_exceptional");
    for (const char* upper_key : {"castelnuovo_a2", "p1_x_a1"}) {
      const auto& upper = profile(upper_key);
      for (int k = 1; k <= 40; ++k) {
        const Rational c = oracle::Gen::ratio(k, 8);
        CHECK(certified_le(weighted_volume_at(lower, c), weighted_volume_at(upper, c)));
      }
      CHECK(certified_le(minimize_scaling(lower).w_star, minimize_scaling(upper).w_star));
    }
  }

  TEST_CASE("local-global comparison on smooth surfaces") {
    const Interval e2 = normalized_volume_bridge(2, Rational(4)).value();
    for (const char* key : {"castelnuovo_a2", "p1_x_a1", "ruled_surface_bccd_exceptional", "ruled_surface_bccd_singular"}) {
      CAPTURE(key);
      CHECK(certified_le(minimize_scaling(profile(key)).w_star, e2));
    }
  }

  TEST_CASE("jensen window bound examples") {
    ValuationProfile one("one", 1, Rational(1), PiecewiseProfile::polynomial(poly({1})));
    CHECK(jensen_bound_window(one, Rational(1), Rational(0), Rational(1)).contains(Rational(1, 2)));
    const auto& cast = profile("castelnuovo_a2");
    const Rational c(70711, 50000);
    Interval wide = jensen_bound_window(cast, c, Rational(0), Rational(1));
    Interval narrow = jensen_bound_window(cast, c, Rational(0), Rational(1, 2));
    CHECK(wide.upper() <= std::log(4.9651));
    CHECK(certified_le(wide, log_weighted_volume_at(cast, c)));
    CHECK(narrow.upper() < wide.lower());
    // cA + log M - c m1 / M with M = 3/2, m1 = 5/6.
    const double cd = c.get_d();
    CHECK(std::fabs(wide.midpoint() - (cd + std::log(1.5) - cd * (5.0 / 6) / 1.5)) < 1e-12);
    CHECK_THROWS_AS(jensen_bound_window(profile("ruled_surface_bccd_singular"), c, Rational(0), Rational(0)), Error);
  }

  TEST_CASE("jensen interior bound examples") {
    ValuationProfile one("one", 1, Rational(1), PiecewiseProfile::polynomial(poly({1})));
    // Z = L[1](1/2) = 2, M = L[y](1/2) = 4: bound = 1 + log 2 - (1/2) 4/2 = log 2.
    CHECK(oracle::near(jensen_bound_interior(one, Rational(1), Rational(1, 2)), std::log(2.0)));
    const auto& cast = profile("castelnuovo_a2");
    Interval b = jensen_bound_interior(cast, Rational(70711, 50000), Rational(1, 2));
    CHECK(b.upper() <= 1.6024);
    for (const auto* vp : catalog_profiles()) {
      for (const Rational& theta : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        CHECK(certified_le(jensen_bound_interior(*vp, Rational(1), theta), log_weighted_volume_at(*vp, Rational(1))));
      }
    }
    CHECK_THROWS_AS(jensen_bound_interior(cast, Rational(1), Rational(1)), Error);
  }

  TEST_CASE("both jensen bounds stay below log W (property)") {
    oracle::Gen g(0x5eed0203);
    for (const auto* vp : catalog_profiles()) {
      for (int i = 0; i < 10; ++i) {
        const Rational c = g.positive_rational(30, 10);
        const Rational s1 = oracle::Gen::ratio(g.integer(0, 8), 4);
        const Rational s2 = s1 + g.positive_rational(8, 4);
        const Rational theta = oracle::Gen::ratio(g.integer(1, 15), 16);
        const Interval logw = log_weighted_volume_at(*vp, c);
        CHECK(certified_le(jensen_bound_window(*vp, c, s1, s2), logw));
        CHECK(certified_le(jensen_bound_interior(*vp, c, theta), logw));
      }
    }
  }

  TEST_CASE("comparison reports") {
    const Interval four(Rational(4), 128);
    const Interval two_e = weighted_volume_at(profile("p1_x_a1"), Rational(1));
    ComparisonReport r = compare_reports({{"p1xp1", four}, {"p1xa1", two_e}}, {{0, 1}, {1, 0}});
    CHECK(r.results[0].verdict == Verdict::Pass);
    CHECK(r.results[1].verdict == Verdict::Fail);
    CHECK_FALSE(r.all_pass());
    ComparisonReport tie = compare_reports({{"a", four}, {"b", Interval(Rational(3), Rational(5), 128)}}, {{0, 1}});
    CHECK(tie.results[0].verdict == Verdict::Indeterminate);
  }

  TEST_CASE("printed divisorial-contraction form") {
    CHECK(divcont_printed_critical(2, Rational(1)) == poly({-2, 0, 1}));
    CHECK(divcont_printed_critical(3, Rational(2)) == poly({-4, 0, 2, 1}));
    CHECK(divcont_printed_polynomial(3, Rational(2)) == poly({2, 2, 1}));
    // Its root c ~ 1.1304 gives W ~ 13.42, away from the derived 11.27.
    const Polynomial crit = divcont_printed_critical(3, Rational(2));
    REQUIRE(isolate_real_roots(crit, Rational(0), Rational(10)).size() == 1);
    std::uintmax_t iterations = 100;
    auto [lo, hi] = boost::math::tools::toms748_solve([&](double c) { return crit(c); }, 1.0, 2.0,
                                                      boost::math::tools::eps_tolerance<double>(50), iterations);
    const double root = (lo + hi) / 2;
    CHECK(std::fabs(root - 1.1304) < 1e-3);
    CHECK(std::fabs(divcont_printed_weighted_volume(3, Rational(2)).approx(root) - 13.42) < 1e-2);
  }
}
