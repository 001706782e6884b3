#pragma once

// Width w_k(E) = length of the cokernel of rho: M -> M^vv, where M = pi_* E is
// the module of sections over the cone ring k_0.
//
// Everything is represented in the U-frame. A section of E is a pair (a, b)
// of polynomials in z, u; a homomorphism M -> k_0 is a pair (f, g) acting by
// f a + g b, with f, g Laurent in u. M is filtered by u-degree but in general
// not graded (p mixes degrees), so "degree" below means the lowest u-degree
// of a section (for M) or the highest u-degree (for homs and the hull).
//
// Truncation D: M is approximated by H^0(l_D, E), homs and the hull by
// exact elements whose u-degrees lie in [-C, D] with C = ceil(max twist / k).
// The width is dim (hull of degree <= D) - dim (sections of degree <= D),
// which is exact once every class of the cokernel has a representative of
// degree <= D and the hom generators found up to D generate M^v.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zk/bundle.hpp"
#include "zk/linalg.hpp"

namespace zk {

/// A sheaf of rank 1 or 2 glued by sigma_V = T sigma_U with
/// T = [[z^twist[0], p], [0, z^twist[1]]] (p only in rank 2).
struct TransitionData {
  int k = 1;
  std::vector<int> twist;
  LaurentPoly2 p;

  static TransitionData from_bundle(const BundleSpec& b);
  /// O(d) has transition z^-d.
  static TransitionData line_bundle(int k, int d);

  int rank() const { return static_cast<int>(twist.size()); }
  /// Largest z-exponent of p, or 0.
  int p_max_s() const;
  /// Pole bound C for homs and the hull.
  int pole_bound() const;
};

/// One Laurent polynomial per component.
using SectionVector = std::vector<LaurentPoly2>;

std::string format_section(const SectionVector& v);

/// Basis of H^0(l_D, E), in echelon form by lowest u-degree.
struct SectionBasis {
  int truncation = 0;
  std::vector<SectionVector> basis;
  std::vector<int> leading_degree;

  /// Number of basis vectors whose lowest u-degree is d, for d = 0..D.
  std::vector<std::size_t> dims_by_degree() const;
};

struct ModuleGenerator {
  int degree = 0;
  SectionVector value;
};

/// Syzygy sum_i coefficients[i] * generator_i = 0 with coefficients in k_0.
struct Relation {
  int degree = 0;
  std::vector<ConeRingElement> coefficients;
};

struct ModulePresentation {
  int k = 1;
  int truncation = 0;
  std::vector<ModuleGenerator> generators;
  std::vector<Relation> relations;
};

/// Hom module or hull, truncated at degree D.
struct DualPresentation {
  int k = 1;
  int truncation = 0;
  int pole_bound = 0;
  std::vector<ModuleGenerator> generators;
  /// images[l][i] = generator l paired with source generator i, in k_0.
  std::vector<std::vector<LaurentPoly2>> images;
  std::vector<Relation> relations;
  /// Dimension of the truncated space and its split by top u-degree
  /// (index 0 is degree -pole_bound).
  std::size_t space_dim = 0;
  std::vector<std::size_t> dims_by_top_degree;
};

SectionBasis section_basis(const TransitionData& t, int truncation);
SectionBasis section_basis(const BundleSpec& b, int truncation);

/// Greedy over lowest degree, modulo the x_i-multiples, each generator lifted
/// to an exact polynomial section. Requires truncation >= floor((twist0-2)/k)
/// so that truncated sections extend.
ModulePresentation minimal_generators(const TransitionData& t, const SectionBasis& sb);

/// Minimal syzygies of the generators with coefficient degree bounded by
/// `max_degree` in the shifted filtration; fills mp.relations.
void compute_relations(ModulePresentation& mp, int max_degree);

/// Syzygies of arbitrary generators (used for both M and its duals).
std::vector<Relation> syzygies(int k, const std::vector<ModuleGenerator>& gens, int max_degree);

/// Homs M -> k_0 with u-degrees in [-C, D], by exact linear solve.
DualPresentation dual_module(const TransitionData& t, const ModulePresentation& mp, int truncation);

/// Elements v of the hull with u-degrees in [-C, D]: phi(v) in k_0 for all
/// generators phi of the dual.
DualPresentation double_dual(const TransitionData& t, const DualPresentation& dual, int truncation);

/// Homs from the hull back to k_0, in the same window as dual_module.
DualPresentation dual_of_hull(const TransitionData& t, const DualPresentation& hull, int truncation);

/// Exact sections of degree <= D, in echelon form by lowest u-degree.
std::vector<SectionVector> bounded_sections(const TransitionData& t, int truncation);

struct WidthOptions {
  /// Starting truncation; negative means the default bound.
  int truncation = -1;
  /// Recompute at D + 1 and demand agreement.
  bool verify_stable = true;
  bool with_relations = false;
};

struct WidthResult {
  std::size_t width = 0;
  int truncation = 0;
  std::size_t hull_dim = 0;
  std::size_t section_dim = 0;
  ModulePresentation module;
  DualPresentation dual;
  DualPresentation hull;
};

/// max(N + k + 2, N + n1 + 1) for a bundle; k + 2 + order for line bundles.
int default_width_truncation(const TransitionData& t);

/// Throws StabilisationError when no two consecutive truncations agree
/// before the hard cap.
WidthResult width_detailed(const TransitionData& t, const WidthOptions& opts = {});
WidthResult width_detailed(const BundleSpec& b, const WidthOptions& opts = {});
std::size_t width(const BundleSpec& b, const WidthOptions& opts = {});

/// w_k(O(d)): (j+1) n2 - k n2 (n2+1)/2 with n2 = floor(j/k) for d = j >= 0,
/// and 0 for d < 0.
std::size_t width_line_bundle(int k, int d);

/// Generators, relations and graded dimensions as a JSON document.
std::string presentation_json(const WidthResult& r);

}  // namespace zk
