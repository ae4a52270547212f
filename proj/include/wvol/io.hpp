#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "wvol/exppoly.hpp"
#include "wvol/quantized.hpp"
#include "wvol/weighted_volume.hpp"

namespace wvol {

using Json = nlohmann::ordered_json;

/// Profile document:
///   {"name": str, "dim": int, "log_discrepancy": "p/q",
///    "pieces": [{"from": "p/q", "to": "p/q" | "inf", "coeffs": ["p/q", ...]}, ...],
///    "allow_discontinuous": bool (optional, default false)}
/// Pieces start at "0", are contiguous, and the last one ends at "inf".
/// Structural problems throw Parse; invalid content throws the domain error
/// raised by the ValuationProfile constructor.
ValuationProfile profile_from_json(const Json& doc);
Json profile_to_json(const ValuationProfile& vp);

/// Model document, one of
///   {"variant": "monomial_germ", "weights": ["p/q", ...]}
///   {"variant": "hypersurface_cone", "n_vars": int, "degree": int}
///   {"variant": "blowup_fibration", "n": int, "a": int}
GermCountingModel model_from_json(const Json& doc);
Json model_to_json(const GermCountingModel& model);

/// [{"rate": "p/q", "poly": {"exponent": "p/q", ...}}, ...]
Json exppoly_to_json(const ExpPoly& f);
ExpPoly exppoly_from_json(const Json& doc);

/// Parses text as JSON; syntax errors throw Parse.
Json parse_json(std::string_view text);
/// Reads a whole file; failures throw Parse.
std::string read_text_file(const std::filesystem::path& path);

/// 17 significant digits in scientific notation. Interval endpoints round
/// outward; point values round to nearest.
std::string render_lower(const Interval& x);
std::string render_upper(const Interval& x);
std::string render_decimal(const Rational& q);
std::string render_decimal(double x);

/// {"lo": ..., "hi": ...}
Json interval_to_json(const Interval& x);

}  // namespace wvol
