#include "zk/invariants.hpp"

#include <sstream>

#include "json.hpp"

#include "zk/errors.hpp"

namespace zk {

namespace {

void require_positive_j(int k, int j) {
  SurfaceConfig::make(k);
  if (j <= 0) throw ValidationError("bounds need j > 0, got " + std::to_string(j));
}

}  // namespace

Bounds bounds_height(int k, int j) {
  require_positive_j(k, j);
  return {j - 1, static_cast<long>(height_line_bundle(k, -j))};
}

Bounds bounds_width(int k, int j) {
  require_positive_j(k, j);
  return {k == 1 ? 1 : 0, static_cast<long>(width_line_bundle(k, j))};
}

Bounds bounds_chi(int k, int j) {
  require_positive_j(k, j);
  if (k == 1) return {j, static_cast<long>(j) * j};
  const long n = j / k, b = j % k;
  if (b == 0) return {j - 1, n * n * k};
  return {j - 1, n * n * k + 2 * n * b + b - 1};
}

std::pair<Bounds, Bounds> charge_gap_ranges(int k) {
  SurfaceConfig::make(k);
  return {Bounds{1, k - 2}, Bounds{k + 1, 2L * k - 2}};
}

InvariantReport invariants(const BundleSpec& b, const InvariantOptions& opts) {
  InvariantReport r;
  r.k = b.k();
  r.j = b.j();
  r.p = b.p();
  r.height = height(b, opts.height);
  r.width = width_detailed(b, opts.width).width;
  r.chi = r.height + r.width;
  r.instanton = b.j() % b.k() == 0;
  if (b.j() > 0) {
    r.height_bounds = bounds_height(b.k(), b.j());
    r.width_bounds = bounds_width(b.k(), b.j());
    r.chi_bounds = bounds_chi(b.k(), b.j());
  }
  r.height_in_bounds = r.height_bounds.contains(static_cast<long>(r.height));
  r.width_in_bounds = r.width_bounds.contains(static_cast<long>(r.width));
  r.chi_in_bounds = r.chi_bounds.contains(static_cast<long>(r.chi));
  if (!r.instanton) {
    r.warnings.push_back("k does not divide j: (h, w) only separates moduli points for instantons");
  }
  return r;
}

std::string report_json(const InvariantReport& r) {
  auto bounds = [](const Bounds& b) { return nlohmann::json::array({b.lo, b.hi}); };
  nlohmann::json out = {
      {"k", r.k},
      {"j", r.j},
      {"p", format_laurent(r.p)},
      {"height", r.height},
      {"width", r.width},
      {"chi", r.chi},
      {"bounds", {{"height", bounds(r.height_bounds)}, {"width", bounds(r.width_bounds)}, {"chi", bounds(r.chi_bounds)}}},
      {"in_bounds", r.in_bounds()},
      {"instanton", r.instanton},
      {"warnings", r.warnings},
  };
  return out.dump(2);
}

std::string report_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "k=" << r.k << " j=" << r.j << " p=" << format_laurent(r.p) << "\n";
  os << "h=" << r.height << " w=" << r.width << " chi=" << r.chi << "\n";
  os << "height bounds [" << r.height_bounds.lo << ", " << r.height_bounds.hi << "]"
     << (r.height_in_bounds ? "" : "  VIOLATED") << "\n";
  os << "width bounds  [" << r.width_bounds.lo << ", " << r.width_bounds.hi << "]"
     << (r.width_in_bounds ? "" : "  VIOLATED") << "\n";
  os << "chi bounds    [" << r.chi_bounds.lo << ", " << r.chi_bounds.hi << "]" << (r.chi_in_bounds ? "" : "  VIOLATED")
     << "\n";
  os << "instanton: " << (r.instanton ? "yes" : "no") << "\n";
  for (const auto& w : r.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace zk
