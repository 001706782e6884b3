#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zk/bundle.hpp"
#include "zk/height.hpp"
#include "zk/width.hpp"

namespace zk {

struct Bounds {
  long lo = 0;
  long hi = 0;
  bool contains(long v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Sharp height bounds for j > 0: (j - 1, (j-1)(n1+1) - k n1(n1+1)/2).
Bounds bounds_height(int k, int j);
/// Sharp width bounds for j > 0: lo is 1 for k = 1, else 0.
Bounds bounds_width(int k, int j);
/// Sharp bounds on chi = h + w for j > 0.
Bounds bounds_chi(int k, int j);

/// Charges that never occur: [1, k-2] and [k+1, 2k-2]; a range with
/// lo > hi is empty.
std::pair<Bounds, Bounds> charge_gap_ranges(int k);

struct InvariantReport {
  int k = 1;
  int j = 0;
  LaurentPoly2 p;
  std::size_t height = 0;
  std::size_t width = 0;
  std::size_t chi = 0;
  Bounds height_bounds;
  Bounds width_bounds;
  Bounds chi_bounds;
  bool height_in_bounds = true;
  bool width_in_bounds = true;
  bool chi_in_bounds = true;
  bool instanton = true;
  std::vector<std::string> warnings;

  bool in_bounds() const { return height_in_bounds && width_in_bounds && chi_in_bounds; }
};

struct InvariantOptions {
  HeightOptions height;
  WidthOptions width;
};

InvariantReport invariants(const BundleSpec& b, const InvariantOptions& opts = {});

std::string report_json(const InvariantReport& r);
std::string report_text(const InvariantReport& r);

}  // namespace zk
