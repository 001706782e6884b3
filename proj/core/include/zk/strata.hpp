#pragma once

// Exhaustive scans of extension classes over a coefficient grid, grouped by
// (height, width).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zk/invariants.hpp"

namespace zk {

struct ScanOptions {
  /// Values each window coefficient ranges over, e.g. {0, 1, -1}.
  std::vector<Rational> coefficients{Rational(0), Rational(1)};
  /// Skip points with more nonzero coefficients; negative means no cap.
  int max_terms = -1;
  /// Refuse grids larger than this.
  std::size_t max_points = 1'000'000;
  /// Keep one of p and -p when both are on the grid (the one whose first
  /// nonzero coefficient is positive). Invariants are unchanged by scaling.
  bool up_to_sign = false;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
  InvariantOptions engine;
};

struct ScanPoint {
  std::vector<Rational> coeffs;
  LaurentPoly2 p;
  std::optional<InvariantReport> report;
  std::string error;
};

struct StratumTable {
  int k = 1;
  int j = 0;
  std::vector<Monomial2> window;
  std::string grid;
  /// Sorted lexicographically by the coefficient vector in window order.
  std::vector<ScanPoint> points;
  /// (height, width) -> indices into points.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> strata;

  std::size_t failures() const;
  std::size_t bound_violations() const;
  /// The (height, width) held by the most grid points. Over a finite grid
  /// this is only a heuristic for the generic stratum.
  std::optional<std::pair<std::size_t, std::size_t>> generic() const;
};

/// Number of grid points a scan would visit.
std::size_t grid_size(std::size_t window_size, const std::vector<Rational>& coefficients, int max_terms);

/// Throws ValidationError for an empty coefficient set or a grid above
/// max_points. Engine errors are recorded per point.
StratumTable scan_strata(int k, int j, const ScanOptions& opts = {});

/// Columns: k, j, p, height, width, chi, instanton, in_bounds.
std::string to_csv(const StratumTable& t);
std::string to_json(const StratumTable& t);
std::string to_text(const StratumTable& t);

}  // namespace zk
