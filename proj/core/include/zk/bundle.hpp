#pragma once

// Rank-2 bundles on Z_k with c_1 = 0, given by canonical extension data
// (k, j, p): the transition matrix from U to V is [[z^j, p], [0, z^-j]].

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "zk/rational.hpp"
#include "zk/surface.hpp"

namespace zk {

/// floor(a / b) for b > 0.
constexpr int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
/// ceil(a / b) for b > 0.
constexpr int ceil_div(int a, int b) { return -floor_div(-a, b); }

/// N(k, j) = floor((2j - 2) / k), clamped at 0 (j = 0 gives a negative value).
int finite_neighborhood_order(int k, int j);

/// 1 <= r <= N and k r - j + 1 <= s <= j - 1.
bool in_canonical_window(int k, int j, Monomial2 m);

/// All window monomials, ordered by (r, s).
std::vector<Monomial2> canonical_window(int k, int j);

struct ExtensionClass {
  int j = 0;
  LaurentPoly2 p;
};

struct WindowViolation {
  int r = 0;
  int s = 0;
  std::string reason;
};

/// Empty when every term of p lies in the canonical window for (k, j).
std::vector<WindowViolation> validate_canonical(int k, const ExtensionClass& ext);

class BundleSpec {
 public:
  /// Throws ValidationError for k < 1, j < 0 or a term outside the window.
  static BundleSpec make(int k, int j, LaurentPoly2 p);
  static BundleSpec split(int k, int j) { return make(k, j, {}); }

  int k() const { return config_.k; }
  int j() const { return ext_.j; }
  const LaurentPoly2& p() const { return ext_.p; }
  const SurfaceConfig& config() const { return config_; }
  const ExtensionClass& ext() const { return ext_; }
  int order() const { return finite_neighborhood_order(k(), j()); }

  friend bool operator==(const BundleSpec& a, const BundleSpec& b) {
    return a.k() == b.k() && a.j() == b.j() && a.p() == b.p();
  }

 private:
  SurfaceConfig config_;
  ExtensionClass ext_;
};

using Matrix2 = std::array<std::array<LaurentPoly2, 2>, 2>;

/// [[z^j, p], [0, z^-j]].
Matrix2 transition_matrix(const BundleSpec& b);

struct SplittingType {
  std::vector<int> degrees;
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// h^0 of the bundle on P^1 with transition [[z^j, q], [0, z^-j]] twisted by O(t).
std::size_t h0_on_ell(int j, const LaurentPoly2& q, int t);

/// Splitting type (a, -a) of that bundle, read off from the h^0 profile for
/// t = -j..j. q must only involve u^0. Throws ValidationError otherwise.
SplittingType splitting_type_on_ell(int k, int j, const LaurentPoly2& q);

/// Coefficientwise multiplication by lambda; lambda = 0 is a ValidationError.
ExtensionClass scale(const ExtensionClass& ext, const Rational& lambda);
BundleSpec scale(const BundleSpec& b, const Rational& lambda);

/// (k, j, p) -> (k, j + k, z^k u^2 p). The image is split on the second
/// infinitesimal neighbourhood.
BundleSpec embed_phi(const BundleSpec& b);

/// {"k": int, "j": int, "p": [{"r": int, "s": int, "c": "rational"}]}
std::string to_json(const BundleSpec& b);
/// Throws ParseError on malformed JSON, ValidationError on a bad window.
BundleSpec bundle_from_json(std::string_view text);

}  // namespace zk
