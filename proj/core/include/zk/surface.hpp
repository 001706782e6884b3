#pragma once

// The surface Z_k = Tot(O(-k)) in its two canonical charts
//
//   U = {(z, u)},   V = {(zeta, v)},   zeta = 1/z,  v = z^k u,
//
// and the cone ring k_0 of the contracted surface X_k, modelled by its image
// under the lifting x_i -> z^i u, i.e. the span of z^a u^d with 0 <= a <= k d.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zk/rational.hpp"

namespace zk {

struct SurfaceConfig {
  int k = 1;

  /// Throws ValidationError unless k >= 1.
  static SurfaceConfig make(int k);
};

/// The monomial z^s u^r. Canonical data has r >= 0; negative r only appears
/// for sections over the punctured neighbourhood Z_k \ l.
struct Monomial2 {
  int s = 0;
  int r = 0;

  friend bool operator==(const Monomial2&, const Monomial2&) = default;
  // u-degree first so that maps iterate degree by degree
  friend auto operator<=>(const Monomial2& a, const Monomial2& b) {
    if (auto c = a.r <=> b.r; c != 0) return c;
    return a.s <=> b.s;
  }
};

/// Sparse Laurent polynomial in z and u with rational coefficients.
class LaurentPoly2 {
 public:
  using TermMap = std::map<Monomial2, Rational>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(int s, int r, const Rational& c = Rational(1));
  static LaurentPoly2 constant(const Rational& c) { return monomial(0, 0, c); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(Monomial2 m) const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(Monomial2 m, const Rational& c);

  std::optional<int> min_r() const;
  std::optional<int> max_r() const;
  std::optional<int> min_s() const;
  std::optional<int> max_s() const;

  /// Multiplies by z^ds u^dr.
  LaurentPoly2 shifted(int ds, int dr) const;
  LaurentPoly2 scaled(const Rational& c) const;
  /// Terms with u-degree <= max_r.
  LaurentPoly2 truncated(int max_r) const;
  /// The coefficient of u^r, as a polynomial in z (placed at u-degree 0).
  LaurentPoly2 u_slice(int r) const;
  /// Restriction to l = {u = 0}.
  LaurentPoly2 restrict_to_ell() const { return u_slice(0); }

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  LaurentPoly2 operator-() const { return scaled(Rational(-1)); }

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

 private:
  TermMap terms_;
};

LaurentPoly2 multiply(const LaurentPoly2& a, const LaurentPoly2& b);
inline LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) { return multiply(a, b); }

/// Holomorphic on U: a polynomial in z and u.
bool is_holomorphic_U(Monomial2 m);
/// Holomorphic on V: a polynomial in 1/z and z^k u, i.e. r >= 0 and s <= k r.
bool is_holomorphic_V(int k, Monomial2 m);
/// Holomorphic on both charts, i.e. a monomial of the cone ring.
bool is_cone_monomial(int k, Monomial2 m);

/// {z^a u^d : 0 <= a <= k d}, ordered by a.
std::vector<Monomial2> cone_ring_basis(int k, int d);

/// Element of k_0 in the monomial model; construction rejects monomials
/// outside the cone.
class ConeRingElement {
 public:
  ConeRingElement() = default;
  ConeRingElement(int k, LaurentPoly2 poly);

  int k() const { return k_; }
  const LaurentPoly2& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  /// Coefficients of the degree-d piece, indexed by a in [0, k d].
  std::vector<Rational> graded_piece(int d) const;

 private:
  int k_ = 1;
  LaurentPoly2 poly_;
};

/// Grammar: terms `c*z^s*u^r` joined by `+`/`-`; `c` a rational like `3` or
/// `-2/5`; `s` any integer; `r` a nonnegative integer; factors may be omitted
/// or reordered; whitespace is ignored. `0` is the zero polynomial.
/// Throws ParseError.
LaurentPoly2 parse_laurent(std::string_view text);

/// Inverse of parse_laurent: terms in (u-degree, z-degree) order.
std::string format_laurent(const LaurentPoly2& p);

}  // namespace zk
