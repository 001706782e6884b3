#include "zk/height.hpp"

#include <algorithm>
#include <cstdlib>

#include "zk/errors.hpp"

namespace zk {

std::optional<std::size_t> CocycleWindow::index_of(Monomial2 m) const {
  auto it = std::lower_bound(basis.begin(), basis.end(), m);
  if (it == basis.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - basis.begin());
}

CocycleWindow canonical_cocycle_basis(int k, int j) {
  SurfaceConfig::make(k);
  CocycleWindow w{k, j, {}};
  if (j <= 1) return w;
  const int n1 = floor_div(j - 2, k);
  for (int r = 0; r <= n1; ++r) {
    for (int s = k * r - j + 1; s <= -1; ++s) w.basis.push_back({s, r});
  }
  return w;
}

SparseVector reduce_cochain(const BundleSpec& b, const CocycleWindow& w, const LaurentPoly2& a,
                            const LaurentPoly2& bpart, int order) {
  LaurentPoly2 acc = a.truncated(order);
  for (const auto& [m, c] : bpart.terms()) {
    if (m.r > order || m.s >= 0) continue;
    // z^t u^r e_2 is cohomologous to z^(t-j) p u^r e_1
    acc += (b.p().shifted(m.s - b.j(), m.r).scaled(c)).truncated(order);
  }
  SparseVector out;
  for (const auto& [m, c] : acc.terms()) {
    if (auto idx = w.index_of(m)) out.emplace_back(*idx, c);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

CoboundarySpan coboundary_span(const BundleSpec& b, const CocycleWindow& w, int z_window, int order) {
  CoboundarySpan span;
  span.z_window = z_window;
  span.order = order;
  std::vector<SparseVector> rows;
  const LaurentPoly2 none;
  auto push = [&](CoboundaryGenerator g, const LaurentPoly2& a, const LaurentPoly2& bp) {
    span.generators.push_back(g);
    rows.push_back(reduce_cochain(b, w, a, bp, order));
  };
  for (int r = 0; r <= order; ++r) {
    for (int s = 0; s <= z_window; ++s) {
      push({CoboundaryGenerator::Chart::U, 0, {s, r}}, LaurentPoly2::monomial(s, r), none);
      push({CoboundaryGenerator::Chart::U, 1, {s, r}}, none, LaurentPoly2::monomial(s, r));
    }
    for (int s = -z_window; s <= b.k() * r; ++s) {
      // T^-1 e_1 = z^-j e_1,  T^-1 e_2 = -p e_1 + z^j e_2
      push({CoboundaryGenerator::Chart::V, 0, {s, r}}, LaurentPoly2::monomial(s - b.j(), r), none);
      push({CoboundaryGenerator::Chart::V, 1, {s, r}}, -b.p().shifted(s, r), LaurentPoly2::monomial(s + b.j(), r));
    }
  }
  span.reduction = SparseMatrix(rows.size(), w.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : rows[i]) span.reduction.set(i, c, v);
  }
  return span;
}

int initial_height_window(const BundleSpec& b) {
  int smax = 0;
  for (const auto& [m, c] : b.p().terms()) smax = std::max(smax, std::abs(m.s));
  return 2 * b.j() + b.k() * b.order() + smax;
}

HeightResult height_detailed(const BundleSpec& b, const HeightOptions& opts) {
  HeightResult res;
  res.order = opts.order >= 0 ? opts.order : b.order();
  const CocycleWindow w = canonical_cocycle_basis(b.k(), b.j());
  res.cocycle_dim = w.size();
  if (w.size() == 0) return res;

  const int w0 = std::max(1, initial_height_window(b) * std::max(1, opts.window_scale));
  const int cap = w0 << 6;
  int window = w0;
  std::size_t prev = rank(coboundary_span(b, w, window, res.order).reduction);
  while (true) {
    if (window * 2 > cap) {
      throw StabilisationError("height did not stabilise below window " + std::to_string(cap));
    }
    const std::size_t next = rank(coboundary_span(b, w, window * 2, res.order).reduction);
    if (next == prev) break;
    prev = next;
    window *= 2;
    ++res.doublings;
  }
  res.z_window = window;
  res.coboundary_rank = prev;
  res.height = w.size() - prev;
  return res;
}

std::size_t height(const BundleSpec& b, const HeightOptions& opts) { return height_detailed(b, opts).height; }

std::size_t height_line_bundle(int k, int d) {
  SurfaceConfig::make(k);
  if (d >= -1) return 0;
  const int j = -d;
  const int n1 = floor_div(j - 2, k);
  return static_cast<std::size_t>((j - 1) * (n1 + 1) - k * n1 * (n1 + 1) / 2);
}

std::size_t height_nonsplit_closed_form(int k, int j, int m) {
  SurfaceConfig::make(k);
  if (m < 1 || j < 1) throw ValidationError("closed form needs m >= 1 and j >= 1");
  if (j == 1) return 0;
  const int mu = std::min(m, floor_div(j - 2, k) + 1);
  return static_cast<std::size_t>(mu * (j - 1) - k * mu * (mu - 1) / 2);
}

}  // namespace zk
