#include "wvol/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <mpfr.h>

#include "wvol/error.hpp"

namespace wvol {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) fail("expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_field(const Json& v, const char* what) {
  if (!v.is_string()) fail(std::string(what) + " must be a rational string");
  return parse_rational(v.get<std::string>());
}

long integer_field(const Json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  return v.get<long>();
}

std::string render(mpfr_srcptr x, mpfr_rnd_t rnd) {
  std::array<char, 64> buf{};
  mpfr_snprintf(buf.data(), buf.size(), "%.16R*e", rnd, x);
  return buf.data();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ValuationProfile profile_from_json(const Json& doc) {
  const Json& name = field(doc, "name");
  if (!name.is_string()) fail("name must be a string");
  const long dim = integer_field(field(doc, "dim"), "dim");
  const Rational a = rational_field(field(doc, "log_discrepancy"), "log_discrepancy");
  bool allow_discontinuous = false;
  if (auto it = doc.find("allow_discontinuous"); it != doc.end()) {
    if (!it->is_boolean()) fail("allow_discontinuous must be a boolean");
    allow_discontinuous = it->get<bool>();
  }

  const Json& pieces = field(doc, "pieces");
  if (!pieces.is_array() || pieces.empty()) fail("pieces must be a non-empty array");
  std::vector<Rational> breakpoints;
  std::vector<Polynomial> polys;
  Rational expected_from = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Json& piece = pieces[i];
    const Rational from = rational_field(field(piece, "from"), "from");
    if (from != expected_from) fail("piece " + std::to_string(i) + " does not start where the previous one ends");
    const Json& coeffs = field(piece, "coeffs");
    if (!coeffs.is_array()) fail("coeffs must be an array");
    std::vector<Rational> cs;
    for (const auto& c : coeffs) cs.push_back(rational_field(c, "coefficient"));
    breakpoints.push_back(from);
    polys.emplace_back(std::move(cs));

    const Json& to = field(piece, "to");
    const bool last = i + 1 == pieces.size();
    if (to.is_string() && to.get<std::string>() == "inf") {
      if (!last) fail("only the last piece may end at \"inf\"");
      break;
    }
    if (last) fail("the last piece must end at \"inf\"");
    expected_from = rational_field(to, "to");
    if (expected_from <= from) fail("piece " + std::to_string(i) + " is empty or reversed");
  }
  Polynomial tail = std::move(polys.back());
  polys.pop_back();
  PiecewiseProfile profile(std::move(breakpoints), std::move(polys), std::move(tail), allow_discontinuous);
  return ValuationProfile(name.get<std::string>(), static_cast<int>(dim), a, std::move(profile));
}

Json profile_to_json(const ValuationProfile& vp) {
  Json doc;
  doc["name"] = vp.name();
  doc["dim"] = vp.dim();
  doc["log_discrepancy"] = to_string(vp.log_discrepancy());
  Json pieces = Json::array();
  const auto& density = vp.profile().density();
  for (std::size_t i = 0; i < density.piece_count(); ++i) {
    Json coeffs = Json::array();
    for (const auto& c : density.piece(i).coeffs()) coeffs.push_back(to_string(c));
    auto end = density.piece_end(i);
    pieces.push_back(Json{{"from", to_string(density.piece_begin(i))},
                          {"to", end ? to_string(*end) : std::string("inf")},
                          {"coeffs", std::move(coeffs)}});
  }
  doc["pieces"] = std::move(pieces);
  doc["allow_discontinuous"] = vp.profile().allow_discontinuous();
  return doc;
}

GermCountingModel model_from_json(const Json& doc) {
  const Json& variant = field(doc, "variant");
  if (!variant.is_string()) fail("variant must be a string");
  const auto name = variant.get<std::string>();
  if (name == "monomial_germ") {
    const Json& weights = field(doc, "weights");
    if (!weights.is_array()) fail("weights must be an array");
    std::vector<Rational> w;
    for (const auto& x : weights) w.push_back(rational_field(x, "weight"));
    return GermCountingModel::monomial_germ(std::move(w));
  }
  if (name == "hypersurface_cone") {
    return GermCountingModel::hypersurface_cone(static_cast<int>(integer_field(field(doc, "n_vars"), "n_vars")),
                                                static_cast<int>(integer_field(field(doc, "degree"), "degree")));
  }
  if (name == "blowup_fibration") {
    return GermCountingModel::blowup_fibration(static_cast<int>(integer_field(field(doc, "n"), "n")),
                                               static_cast<int>(integer_field(field(doc, "a"), "a")));
  }
  fail("unknown model variant \"" + name + "\"");
}

Json model_to_json(const GermCountingModel& model) {
  Json doc;
  doc["variant"] = std::string(model.variant_name());
  if (const auto* g = std::get_if<MonomialGerm>(&model.variant())) {
    Json w = Json::array();
    for (const auto& x : g->weights) w.push_back(to_string(x));
    doc["weights"] = std::move(w);
  } else if (const auto* h = std::get_if<HypersurfaceCone>(&model.variant())) {
    doc["n_vars"] = h->n_vars;
    doc["degree"] = h->degree;
  } else {
    const auto& b = std::get<BlowupFibration>(model.variant());
    doc["n"] = b.n;
    doc["a"] = b.a;
  }
  return doc;
}

Json exppoly_to_json(const ExpPoly& f) {
  Json terms = Json::array();
  for (const auto& term : f.terms()) {
    Json poly = Json::object();
    for (const auto& [e, c] : term.poly.terms()) poly[std::to_string(e)] = to_string(c);
    terms.push_back(Json{{"rate", to_string(term.rate)}, {"poly", std::move(poly)}});
  }
  return terms;
}

ExpPoly exppoly_from_json(const Json& doc) {
  if (!doc.is_array()) fail("an exponential polynomial must be an array of terms");
  std::vector<ExpTerm> terms;
  for (const auto& t : doc) {
    const Json& poly = field(t, "poly");
    if (!poly.is_object()) fail("poly must be an object");
    LaurentPolynomial p;
    for (const auto& [key, value] : poly.items()) {
      int exponent = 0;
      try {
        std::size_t used = 0;
        exponent = std::stoi(key, &used);
        if (used != key.size()) fail("bad exponent \"" + key + "\"");
      } catch (const std::logic_error&) {
        fail("bad exponent \"" + key + "\"");
      }
      p += LaurentPolynomial::monomial(rational_field(value, "coefficient"), exponent);
    }
    terms.push_back({std::move(p), rational_field(field(t, "rate"), "rate")});
  }
  return ExpPoly::from_terms(std::move(terms));
}

std::string render_lower(const Interval& x) { return render(x.lo(), MPFR_RNDD); }
std::string render_upper(const Interval& x) { return render(x.hi(), MPFR_RNDU); }

std::string render_decimal(const Rational& q) {
  mpfr_t v;
  mpfr_init2(v, kDefaultPrecisionBits);
  mpfr_set_q(v, q.get_mpq_t(), MPFR_RNDN);
  std::string s = render(v, MPFR_RNDN);
  mpfr_clear(v);
  return s;
}

std::string render_decimal(double x) {
  mpfr_t v;
  mpfr_init2(v, 53);
  mpfr_set_d(v, x, MPFR_RNDN);
  std::string s = render(v, MPFR_RNDN);
  mpfr_clear(v);
  return s;
}

Json interval_to_json(const Interval& x) { return Json{{"lo", render_lower(x)}, {"hi", render_upper(x)}}; }

}  // namespace wvol
