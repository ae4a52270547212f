#include "wvol/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "wvol/error.hpp"
#include "wvol/io.hpp"

namespace wvol {

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return Polynomial(std::move(cs));
}

ValuationProfile piecewise(std::string name, int dim, long a, std::vector<Polynomial> bounded, Polynomial tail,
                           std::vector<Rational> breakpoints) {
  return ValuationProfile(std::move(name), dim, Rational(a),
                          PiecewiseProfile(std::move(breakpoints), std::move(bounded), std::move(tail)));
}

ExpectedValue derived(std::string printed, int digits, std::string refined) {
  return {std::move(printed), digits, std::move(refined), "closed form evaluated at 30 digits"};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  {
    CatalogEntry e;
    e.key = "castelnuovo_a2";
    e.title = "Blowup of the origin of A^2";
    e.citation = "Castelnuovo contraction: \"4.96\\cdots\", minimizer \"b=\\frac{1}{\\sqrt{2}}\"";
    e.profiles.push_back(piecewise("castelnuovo_a2", 2, 1, {}, poly({1, 1}), {Rational(0)}));
    e.counting_model = GermCountingModel::blowup_fibration(2, 1);
    e.w_star = derived("4.96", 3, "4.96513242494700700841");
    e.c_star = ExpectedValue{"1.41", 3, "1.41421356237309504880", "c = 1/b with b = 1/sqrt(2)"};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "p1_x_a1";
    e.title = "P^1 x A^1 over A^1";
    e.citation = "P^1-bundle: \"\\mathbb{W}(\\pi)=2e=5.436\\cdots\"";
    ValuationProfile base("a1_germ", 1, Rational(1), PiecewiseProfile::polynomial(poly({1})));
    e.profiles.push_back(pullback_profile(base, Rational(2), 2));
    e.w_star = derived("5.436", 4, "5.43656365691809047072");
    e.c_star = ExpectedValue{"", 0, "1", "closed form 2 e^c / c"};
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "compact_p1xp1";
    e.title = "P^1 x P^1 over a point";
    e.citation = "compact Fano case: \"\\mathbb{W}(\\mathbb{P}^1\\times \\mathbb{P}^1\\to {\\rm pt})=4\"";
    e.compact = CompactFano{2, Rational(8)};
    e.w_star = ExpectedValue{"4", 2, "4", "exact: 8 / 2!"};
    c.push_back(std::move(e));
  }

  auto germ = [&](std::string key, std::string title, std::string citation, GermCountingModel model,
                  ExpectedValue w, std::string c_refined) {
    CatalogEntry e;
    e.key = key;
    e.title = std::move(title);
    e.citation = std::move(citation);
    ValuationProfile exact = exact_profile(model);
    e.profiles.push_back(ValuationProfile(key, exact.dim(), exact.log_discrepancy(), exact.profile()));
    e.counting_model = std::move(model);
    e.w_star = std::move(w);
    e.c_star = ExpectedValue{"", 0, std::move(c_refined), "closed form n / A"};
    c.push_back(std::move(e));
  };
  germ("smooth_germ_2", "Smooth surface germ", "smooth germ: \"7.389\\cdots (n=2)\"",
       GermCountingModel::monomial_germ({Rational(1), Rational(1)}), derived("7.389", 4, "7.38905609893065022723"),
       "1");
  germ("smooth_germ_3", "Smooth threefold germ", "smooth germ: \"20.0855\\cdots (n=3)\"",
       GermCountingModel::monomial_germ({Rational(1), Rational(1), Rational(1)}),
       derived("20.0855", 6, "20.0855369231876677409"), "1");
  germ("odp_germ_2", "Ordinary double point, surface", "ordinary double point: \"3.69\\cdots (n=2)\"",
       GermCountingModel::hypersurface_cone(3, 2), derived("3.69", 3, "3.69452804946532511362"), "2");
  germ("odp_germ_3", "Ordinary double point, threefold", "ordinary double point: \"11.9025\\cdots (n=3)\"",
       GermCountingModel::hypersurface_cone(4, 2), derived("11.9025", 6, "11.9025403989260253280"), "1.5");

  ValuationProfile exceptional = piecewise("ruled_surface_bccd_exceptional", 2, 1, {poly({1, 1})}, poly({2}),
                                           {Rational(0), Rational(1)});
  ValuationProfile singular =
      piecewise("ruled_surface_bccd_singular", 2, 2, {poly({0, 1})}, poly({1}), {Rational(0), Rational(1)});
  {
    CatalogEntry e;
    e.key = "ruled_surface_bccd_exceptional";
    e.title = "Non-geometric ruled surface, exceptional curve valuation";
    e.citation = "non-geometric ruled surface: \"=4.3\\cdots\" attained at \"c=1.1\\cdots\"";
    e.profiles.push_back(exceptional);
    e.w_star = derived("4.3", 2, "4.37697311385183589388");
    e.c_star = derived("1.1", 2, "1.17600194230686120774");
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "ruled_surface_bccd_singular";
    e.title = "Non-geometric ruled surface, blowup of the maximal ideal";
    e.citation = "non-geometric ruled surface: \"c=0.64\\cdots\", \"\\mathbb{W}(\\pi)=4.1\\cdots\"";
    e.profiles.push_back(singular);
    e.w_star = derived("4.1", 2, "4.15070348525216762470");
    e.c_star = derived("0.64", 2, "0.643797758201442603418");
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "ruled_surface_bccd";
    e.title = "Non-geometric ruled surface, fibration value";
    e.citation = "non-geometric ruled surface: \"\\mathbb{W}(\\pi)=4.1\\cdots\"";
    e.profiles = {exceptional, singular};
    e.w_star = derived("4.1", 2, "4.15070348525216762470");
    e.c_star = derived("0.64", 2, "0.643797758201442603418");
    c.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = "divcont_n3_a2";
    e.title = "Divisorial contraction to a smooth threefold point, discrepancy 2";
    e.citation = "divisorial contraction to point: \"(c-2)P(c)+c P'(c) = 0\"";
    e.profiles.push_back(blowup_point_profile(3, Rational(2)));
    e.counting_model = GermCountingModel::blowup_fibration(3, 2);
    e.w_star = ExpectedValue{"", 0, "11.2652267862402211774", "derived profile (a+y)^2/2, confirmed by the counting model"};
    e.c_star = ExpectedValue{"", 0, "1.56746837485242209163", "root of 2c^3 - 3c - 3"};
    c.push_back(std::move(e));
  }
  return c;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

// Relative distance of x from the decimal string `ref`.
double relative_gap(double x, const std::string& ref) {
  const double r = std::stod(ref);
  return std::fabs(x - r) / std::fabs(r);
}

// True when the printed digits are a truncation of some point of x.
bool truncation_consistent(const Interval& x, const std::string& printed) {
  const Rational lo = parse_rational(printed);
  const auto dot = printed.find('.');
  const long decimals = dot == std::string::npos ? 0 : static_cast<long>(printed.size() - dot - 1);
  const Rational hi = lo + Rational(1) / pow(Rational(10), static_cast<unsigned>(decimals));
  return x.upper_rational() >= lo && x.lower_rational() < hi;
}

void compare(CatalogReport& report, const std::string& what, const Interval& value, const ExpectedValue& expected) {
  const double mid = value.midpoint();
  if (!expected.printed.empty()) {
    const double tol = std::pow(10.0, 1 - expected.digits_from_paper);
    const double gap = relative_gap(mid, expected.printed);
    report.checks.push_back({what + " vs printed " + expected.printed, gap <= tol,
                             "relative gap " + render_decimal(gap) + ", tolerance " + render_decimal(tol)});
    report.checks.push_back({what + " truncates to " + expected.printed, truncation_consistent(value, expected.printed),
                             "enclosure [" + render_lower(value) + ", " + render_upper(value) + "]"});
  }
  const double gap = relative_gap(mid, expected.refined);
  report.checks.push_back({what + " vs refined " + expected.refined, gap <= 1e-9,
                           "relative gap " + render_decimal(gap) + " (" + expected.refined_source + ")"});
}

Interval entry_value(const CatalogEntry& entry, const MinimizeConfig& cfg) {
  if (entry.compact) return Interval(compact_fano_wv(entry.compact->n, entry.compact->volume), cfg.precision);
  std::optional<Interval> best;
  for (const auto& vp : entry.profiles) {
    Interval w = minimize_scaling(vp, cfg).w_star;
    if (!best || w.midpoint() < best->midpoint()) best = std::move(w);
  }
  return *best;
}

}  // namespace

std::vector<std::string> catalog_list() {
  std::vector<std::string> keys;
  for (const auto& e : catalog()) keys.push_back(e.key);
  return keys;
}

const CatalogEntry& catalog_entry(std::string_view key) {
  for (const auto& e : catalog()) {
    if (e.key == key) return e;
  }
  throw Error(ErrorKind::UnknownKey, "no catalog entry \"" + std::string(key) + "\"");
}

bool CatalogReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CatalogCheck& c) { return c.pass; });
}

CatalogReport catalog_run(std::string_view key, const MinimizeConfig& cfg) {
  const CatalogEntry& entry = catalog_entry(key);
  CatalogReport report{entry.key, Interval(cfg.precision), std::nullopt, {}, std::nullopt, {}};

  if (entry.compact) {
    report.w_star = Interval(compact_fano_wv(entry.compact->n, entry.compact->volume), cfg.precision);
  } else {
    std::size_t best = 0;
    for (std::size_t i = 0; i < entry.profiles.size(); ++i) {
      report.runs.push_back({entry.profiles[i].name(), minimize_scaling(entry.profiles[i], cfg)});
      if (i > 0 && report.runs[i].result.w_star.midpoint() < report.runs[best].result.w_star.midpoint()) best = i;
    }
    report.w_star = report.runs[best].result.w_star;
    report.c_star = report.runs[best].result.c_star;
    for (const auto& run : report.runs) {
      report.checks.push_back({run.profile + " has an interior minimum",
                               run.result.status == MinimizationStatus::InteriorMin,
                               std::string(status_name(run.result.status))});
    }
    if (report.runs.size() > 1) {
      bool separated = true;
      for (std::size_t i = 0; i < report.runs.size(); ++i) {
        if (i != best && !(report.w_star.upper() < report.runs[i].result.w_star.lower())) separated = false;
      }
      report.checks.push_back({"fibration value is the smallest profile minimum", separated,
                               "minimum attained by " + report.runs[best].profile});
    }
  }

  compare(report, "W*", report.w_star, entry.w_star);
  if (entry.c_star && report.c_star) compare(report, "c*", *report.c_star, *entry.c_star);

  if (entry.counting_model) {
    OracleRun oracle{report.c_star->midpoint_rational(), {}};
    oracle.rows = convergence_study(*entry.counting_model, oracle.scaling, kOracleLevels, kDefaultTailEps,
                                    cfg.precision);
    const auto& last = oracle.rows.back();
    const double rel = last.abs_err / last.exact.midpoint();
    report.checks.push_back({"counting oracle within 1% at level " + std::to_string(last.level), rel < 0.01,
                             "relative error " + render_decimal(rel)});
    bool ratios_ok = true;
    std::string ratios;
    for (const auto& row : oracle.rows) {
      if (!row.err_ratio) continue;
      ratios += (ratios.empty() ? "" : ", ") + render_decimal(*row.err_ratio);
      if (*row.err_ratio < 0.4 || *row.err_ratio > 0.6) ratios_ok = false;
    }
    report.checks.push_back({"counting oracle error halves per doubling", ratios_ok, "ratios " + ratios});
    report.oracle = std::move(oracle);
  }
  return report;
}

ComparisonReport catalog_chain(const MinimizeConfig& cfg) {
  std::vector<ReportEntry> entries;
  for (const char* key : {"compact_p1xp1", "p1_x_a1", "ruled_surface_bccd", "castelnuovo_a2"}) {
    entries.push_back({key, entry_value(catalog_entry(key), cfg)});
  }
  entries.push_back({"smooth_germ_2 (e^2)", normalized_volume_bridge(2, Rational(4)).value(cfg.precision)});
  return compare_reports(entries, {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace wvol
