#include "wvol/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "wvol/catalog.hpp"
#include "wvol/error.hpp"
#include "wvol/io.hpp"

namespace wvol {

namespace {

long default_precision() {
  const char* env = std::getenv("WVOL_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  Rational bits = parse_rational(env);
  if (bits.get_den() != 1 || !bits.get_num().fits_slong_p()) {
    throw Error(ErrorKind::Parse, "WVOL_PRECISION_BITS must be an integer");
  }
  return bits.get_num().get_si();
}

ValuationProfile load_profile(const std::string& path, std::ostream& err) {
  ValuationProfile vp = profile_from_json(parse_json(read_text_file(path)));
  for (const auto& w : vp.profile().warnings()) err << "warning: " << w << '\n';
  return vp;
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

void print(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json minimization_to_json(const std::string& name, const MinimizationResult& r) {
  Json minima = Json::array();
  for (const auto& m : r.minima) {
    minima.push_back(Json{{"c_lo", render_decimal(m.lo)}, {"c_hi", render_decimal(m.hi)}, {"W", interval_to_json(m.value)}});
  }
  return Json{{"profile", name},
              {"status", std::string(status_name(r.status))},
              {"c_star", interval_to_json(r.c_star)},
              {"w_star", interval_to_json(r.w_star)},
              {"sign_changes", r.sign_changes},
              {"minima", std::move(minima)},
              {"G", exppoly_to_json(r.critical)}};
}

Json report_to_json(const CatalogEntry& entry, const CatalogReport& r) {
  Json doc{{"key", r.key}, {"title", entry.title}, {"citation", entry.citation}, {"pass", r.pass()}};
  doc["w_star"] = interval_to_json(r.w_star);
  if (r.c_star) doc["c_star"] = interval_to_json(*r.c_star);
  Json runs = Json::array();
  for (const auto& run : r.runs) {
    Json j = minimization_to_json(run.profile, run.result);
    j.erase("G");
    runs.push_back(std::move(j));
  }
  doc["profiles"] = std::move(runs);
  if (r.oracle) {
    Json rows = Json::array();
    for (const auto& row : r.oracle->rows) {
      rows.push_back(Json{{"level", row.level},
                          {"value", interval_to_json(row.value)},
                          {"abs_err", render_decimal(row.abs_err)}});
    }
    doc["oracle"] = Json{{"model", model_to_json(*entry.counting_model)},
                         {"scaling", render_decimal(r.oracle->scaling)},
                         {"exact", interval_to_json(r.oracle->rows.front().exact)},
                         {"rows", std::move(rows)}};
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"check", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  doc["checks"] = std::move(checks);
  return doc;
}

std::string curve_csv(const ValuationProfile& vp, const Rational& c_min, const Rational& c_max, int samples,
                      long bits) {
  const ExpPoly w = weighted_volume_fn(vp);
  std::ostringstream csv;
  csv << "c,W_lo,W_hi\n";
  for (const auto& c : log_spaced_grid(c_min, c_max, samples)) {
    Interval v = w.eval(c, bits);
    csv << render_decimal(c) << ',' << render_lower(v) << ',' << render_upper(v) << '\n';
  }
  return csv.str();
}

std::string quantize_csv(const GermCountingModel& model, const Rational& scaling, const std::vector<long>& levels,
                         double tail_eps, long bits) {
  std::ostringstream csv;
  csv << "level,value_lo,value_hi,exact,abs_err,err_ratio\n";
  for (const auto& row : convergence_study(model, scaling, levels, tail_eps, bits)) {
    csv << row.level << ',' << render_lower(row.value) << ',' << render_upper(row.value) << ','
        << render_decimal(row.exact.midpoint()) << ',' << render_decimal(row.abs_err) << ','
        << (row.err_ratio ? render_decimal(*row.err_ratio) : std::string()) << '\n';
  }
  return csv.str();
}

std::vector<long> parse_levels(const std::string& text) {
  std::vector<long> levels;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational l = parse_rational(item);
    if (l.get_den() != 1 || !l.get_num().fits_slong_p()) throw Error(ErrorKind::Parse, "levels must be integers");
    levels.push_back(l.get_num().get_si());
  }
  if (levels.empty()) throw Error(ErrorKind::Parse, "no levels given");
  return levels;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return kExitParse;
    case ErrorKind::InconclusiveSign:
      return kExitInconclusive;
    default:
      return kExitDomain;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted volumes of Fano fibrations: exact evaluation, minimization and lattice-count checks",
               "wvol"};
  app.require_subcommand(1);

  std::string profile_path, model_path, out_path, c_text, c_min_text, c_max_text, tol_text, scaling_text, levels_text;
  std::optional<long> bits_flag;
  int grid = 512;
  int samples = 0;
  double tail_eps = kDefaultTailEps;
  std::string catalog_key;
  std::function<int()> action;

  auto add_bits = [&](CLI::App* sub) { sub->add_option("--bits", bits_flag, "MPFR working precision in bits"); };
  auto precision = [&] { return bits_flag ? *bits_flag : default_precision(); };

  auto* eval = app.add_subcommand("eval", "Evaluate W(c) and print its exact exponential polynomial");
  eval->add_option("--profile", profile_path, "profile document")->required();
  eval->add_option("--c", c_text, "rescaling parameter (rational)")->required();
  add_bits(eval);
  eval->callback([&] {
    action = [&] {
      ValuationProfile vp = load_profile(profile_path, err);
      const Rational c = parse_rational(c_text);
      const long bits = precision();
      Interval w = weighted_volume_at(vp, c, bits);
      print(out, Json{{"profile", vp.name()},
                      {"c", to_string(c)},
                      {"W", interval_to_json(w)},
                      {"W_fn", exppoly_to_json(weighted_volume_fn(vp))}});
      return int{kExitOk};
    };
  });

  auto* minimize = app.add_subcommand("minimize", "Minimize W(c) over the rescaling parameter");
  minimize->add_option("--profile", profile_path, "profile document")->required();
  minimize->add_option("--c-min", c_min_text, "lower end of the search range");
  minimize->add_option("--c-max", c_max_text, "upper end of the search range");
  minimize->add_option("--grid", grid, "number of log-spaced grid points");
  minimize->add_option("--tol", tol_text, "bisection tolerance");
  add_bits(minimize);
  minimize->callback([&] {
    action = [&] {
      ValuationProfile vp = load_profile(profile_path, err);
      MinimizeConfig cfg;
      if (!c_min_text.empty()) cfg.c_min = parse_rational(c_min_text);
      if (!c_max_text.empty()) cfg.c_max = parse_rational(c_max_text);
      if (!tol_text.empty()) cfg.tol = parse_rational(tol_text);
      cfg.grid_points = grid;
      cfg.precision = precision();
      print(out, minimization_to_json(vp.name(), minimize_scaling(vp, cfg)));
      return int{kExitOk};
    };
  });

  auto* curve = app.add_subcommand("curve", "Tabulate W on a log-spaced grid as CSV");
  curve->add_option("--profile", profile_path, "profile document")->required();
  curve->add_option("--c-min", c_min_text, "first grid point")->required();
  curve->add_option("--c-max", c_max_text, "last grid point")->required();
  curve->add_option("--samples", samples, "number of rows")->required();
  curve->add_option("--out", out_path, "CSV file (stdout when omitted)");
  add_bits(curve);
  curve->callback([&] {
    action = [&] {
      ValuationProfile vp = load_profile(profile_path, err);
      emit(curve_csv(vp, parse_rational(c_min_text), parse_rational(c_max_text), samples, precision()), out_path,
           out);
      return int{kExitOk};
    };
  });

  auto* quantize = app.add_subcommand("quantize", "Convergence table of the quantized weighted volume as CSV");
  quantize->add_option("--model", model_path, "model document")->required();
  quantize->add_option("--scaling", scaling_text, "valuation scaling (rational)")->required();
  quantize->add_option("--levels", levels_text, "ascending comma-separated levels")->required();
  quantize->add_option("--tail-eps", tail_eps, "relative tail bound for truncated sums");
  quantize->add_option("--out", out_path, "CSV file (stdout when omitted)");
  add_bits(quantize);
  quantize->callback([&] {
    action = [&] {
      GermCountingModel model = model_from_json(parse_json(read_text_file(model_path)));
      emit(quantize_csv(model, parse_rational(scaling_text), parse_levels(levels_text), tail_eps, precision()),
           out_path, out);
      return int{kExitOk};
    };
  });

  auto* cat = app.add_subcommand("catalog", "Built-in reference examples");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List entry keys");
  list->callback([&] {
    action = [&] {
      for (const auto& key : catalog_list()) out << key << '\t' << catalog_entry(key).title << '\n';
      return int{kExitOk};
    };
  });
  auto* run = cat->add_subcommand("run", "Check one entry, or every entry when KEY is omitted");
  run->add_option("key", catalog_key, "entry key");
  add_bits(run);
  run->callback([&] {
    action = [&] {
      MinimizeConfig cfg;
      cfg.precision = precision();
      std::vector<std::string> keys = catalog_key.empty() ? catalog_list() : std::vector<std::string>{catalog_key};
      bool all_pass = true;
      Json reports = Json::array();
      for (const auto& key : keys) {
        CatalogReport r = catalog_run(key, cfg);
        all_pass = all_pass && r.pass();
        reports.push_back(report_to_json(catalog_entry(key), r));
      }
      print(out, catalog_key.empty() ? Json{{"pass", all_pass}, {"entries", std::move(reports)}} : reports[0]);
      if (!all_pass) err << "catalog mismatch\n";
      return all_pass ? int{kExitOk} : int{kExitMismatch};
    };
  });
  auto* chain = cat->add_subcommand("chain", "Certify the inequality chain between entries");
  add_bits(chain);
  chain->callback([&] {
    action = [&] {
      MinimizeConfig cfg;
      cfg.precision = precision();
      ComparisonReport report = catalog_chain(cfg);
      Json rows = Json::array();
      for (const auto& r : report.results) {
        rows.push_back(Json{{"lhs", r.lhs},
                            {"rhs", r.rhs},
                            {"lhs_value", interval_to_json(r.lhs_value)},
                            {"rhs_value", interval_to_json(r.rhs_value)},
                            {"verdict", std::string(verdict_name(r.verdict))}});
      }
      print(out, Json{{"pass", report.all_pass()}, {"relations", std::move(rows)}});
      if (!report.all_pass()) err << "chain comparison did not pass\n";
      return report.all_pass() ? int{kExitOk} : int{kExitMismatch};
    };
  });
  auto* exp = cat->add_subcommand("export", "Print an entry as a profile document");
  exp->add_option("key", catalog_key, "entry key")->required();
  exp->callback([&] {
    action = [&] {
      const CatalogEntry& entry = catalog_entry(catalog_key);
      if (entry.profiles.size() != 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "entry \"" + entry.key + "\" is not a single profile; export its component entries instead");
      }
      print(out, profile_to_json(entry.profiles.front()));
      return int{kExitOk};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out, usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    err << usage_err.str();
    return code == 0 ? int{kExitOk} : int{kExitParse};
  }

  try {
    return action ? action() : int{kExitParse};
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace wvol
