#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wvol/quantized.hpp"
#include "wvol/weighted_volume.hpp"

namespace wvol {

/// A decimal reference value: the truncated digits printed in the source
/// example and an independently computed refinement.
struct ExpectedValue {
  std::string printed;    // e.g. "4.96"; empty when nothing was printed
  int digits_from_paper;  // significant digits of `printed`
  std::string refined;    // many more digits
  std::string refined_source;
};

/// The weighted volume of a compact K-semistable Fano n-fold with
/// anticanonical degree `volume`.
struct CompactFano {
  int n;
  Rational volume;
};

struct CatalogEntry {
  std::string key;
  std::string title;
  /// Quote identifying the worked example this entry reproduces.
  std::string citation;
  /// Vertical valuation families; the entry's value is the smallest of
  /// their minima. Empty for compact entries.
  std::vector<ValuationProfile> profiles;
  std::optional<CompactFano> compact;
  std::optional<GermCountingModel> counting_model;
  ExpectedValue w_star;
  std::optional<ExpectedValue> c_star;
};

/// Keys in a fixed order.
std::vector<std::string> catalog_list();

/// Throws UnknownKey.
const CatalogEntry& catalog_entry(std::string_view key);

struct CatalogCheck {
  std::string label;
  bool pass;
  std::string detail;
};

struct ProfileRun {
  std::string profile;
  MinimizationResult result;
};

struct OracleRun {
  Rational scaling;
  std::vector<ConvergenceRow> rows;
};

inline constexpr long kOracleLevels[] = {50, 100, 200};

struct CatalogReport {
  std::string key;
  Interval w_star;
  std::optional<Interval> c_star;
  std::vector<ProfileRun> runs;
  std::optional<OracleRun> oracle;
  std::vector<CatalogCheck> checks;

  bool pass() const;
};

/// Minimizes every profile, runs the counting oracle at levels 50, 100, 200
/// at the certified minimizer when the entry has a model, and compares with
/// the expected values: relative tolerance 10^{1 - digits} against the
/// printed digits (which must also be a truncation of the value) and 10^{-9}
/// against the refinement.
CatalogReport catalog_run(std::string_view key, const MinimizeConfig& cfg = {});

/// The displayed inequality chain, as certified interval comparisons:
/// P^1 x P^1 <= P^1 x A^1, BCCD <= Castelnuovo, BCCD <= e^2, Castelnuovo <= e^2.
ComparisonReport catalog_chain(const MinimizeConfig& cfg = {});

}  // namespace wvol
