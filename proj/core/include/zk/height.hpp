#pragma once

// Height h_k(E) = length R^1 pi_* E, computed as dim H^1(l_N, E|l_N) by Cech
// cohomology for the cover {U, V}.
//
// A 1-cochain is a pair (A, B) of Laurent polynomials on U n V, written in
// the U-frame. Coboundaries are the U-sections (polynomial in z, u) plus the
// V-sections pulled back by T^-1 = [[z^-j, -p], [0, z^j]]. Modulo the
// diagonal part of those, every cochain reduces onto the cocycle window
// {z^s u^r e_1 : 0 <= r <= n1, kr - j + 1 <= s <= -1}; the remaining
// coboundaries are the reductions of -p z^s u^r e_1 + z^(s+j) u^r e_2.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zk/bundle.hpp"
#include "zk/linalg.hpp"

namespace zk {

struct CocycleWindow {
  int k = 1;
  int j = 0;
  std::vector<Monomial2> basis;

  std::size_t size() const { return basis.size(); }
  std::optional<std::size_t> index_of(Monomial2 m) const;
};

/// n1 = floor((j - 2) / k); the window is empty for j <= 1.
CocycleWindow canonical_cocycle_basis(int k, int j);

/// A 0-cochain monomial z^s u^r in component `component` (0 or 1), either a
/// U-section or a V-section expressed in the V-frame.
struct CoboundaryGenerator {
  enum class Chart { U, V };
  Chart chart = Chart::U;
  int component = 0;
  Monomial2 m;
};

struct CoboundarySpan {
  std::vector<CoboundaryGenerator> generators;
  /// Row i is the reduction of generators[i] in CocycleWindow coordinates.
  SparseMatrix reduction;
  int z_window = 0;
  int order = 0;
};

/// Reduces the cochain (A, B) on l_order onto the cocycle window.
SparseVector reduce_cochain(const BundleSpec& b, const CocycleWindow& w, const LaurentPoly2& a,
                            const LaurentPoly2& bpart, int order);

/// Coboundaries of all 0-cochain monomials with |s| <= z_window and r <= order.
CoboundarySpan coboundary_span(const BundleSpec& b, const CocycleWindow& w, int z_window, int order);

struct HeightOptions {
  /// Neighbourhood order; negative means N(k, j).
  int order = -1;
  /// Multiplier on the initial enumeration window.
  int window_scale = 1;
};

struct HeightResult {
  std::size_t height = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_rank = 0;
  int order = 0;
  int z_window = 0;
  int doublings = 0;
};

/// Throws StabilisationError if the window does not stabilise before 2^6 W0.
HeightResult height_detailed(const BundleSpec& b, const HeightOptions& opts = {});
std::size_t height(const BundleSpec& b, const HeightOptions& opts = {});

/// Initial enumeration window 2j + kN + max |s| over p.
int initial_height_window(const BundleSpec& b);

/// h_k(O(d)): 0 for d >= -1, else sum over n >= 0 of (j - 1 - nk)^+ with j = -d.
std::size_t height_line_bundle(int k, int d);

/// mu' (j - 1) - k mu'(mu' - 1)/2 with mu' = min(m, floor((j-2)/k) + 1).
/// Equal to the height when p is holomorphic on Z_k with smallest u-exponent m.
std::size_t height_nonsplit_closed_form(int k, int j, int m);

}  // namespace zk
