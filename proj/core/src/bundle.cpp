#include "zk/bundle.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "zk/errors.hpp"
#include "zk/linalg.hpp"

namespace zk {

int finite_neighborhood_order(int k, int j) {
  if (k < 1) throw ValidationError("k must be >= 1");
  return std::max(0, floor_div(2 * j - 2, k));
}

bool in_canonical_window(int k, int j, Monomial2 m) {
  const int n = finite_neighborhood_order(k, j);
  return m.r >= 1 && m.r <= n && m.s >= k * m.r - j + 1 && m.s <= j - 1;
}

std::vector<Monomial2> canonical_window(int k, int j) {
  std::vector<Monomial2> out;
  const int n = finite_neighborhood_order(k, j);
  for (int r = 1; r <= n; ++r) {
    for (int s = k * r - j + 1; s <= j - 1; ++s) out.push_back({s, r});
  }
  return out;
}

std::vector<WindowViolation> validate_canonical(int k, const ExtensionClass& ext) {
  std::vector<WindowViolation> out;
  const int n = finite_neighborhood_order(k, ext.j);
  for (const auto& [m, c] : ext.p.terms()) {
    if (in_canonical_window(k, ext.j, m)) continue;
    std::string why;
    if (m.r < 1) {
      why = "u-exponent must be >= 1";
    } else if (m.r > n) {
      why = "u-exponent exceeds N=" + std::to_string(n);
    } else {
      why = "z-exponent outside [" + std::to_string(k * m.r - ext.j + 1) + ", " + std::to_string(ext.j - 1) + "]";
    }
    out.push_back({m.r, m.s, std::move(why)});
  }
  return out;
}

BundleSpec BundleSpec::make(int k, int j, LaurentPoly2 p) {
  BundleSpec b;
  b.config_ = SurfaceConfig::make(k);
  if (j < 0) throw ValidationError("splitting type j must be >= 0, got " + std::to_string(j));
  b.ext_ = ExtensionClass{j, std::move(p)};
  auto bad = validate_canonical(k, b.ext_);
  if (!bad.empty()) {
    std::string msg = "extension class outside the canonical window:";
    for (const auto& v : bad) {
      msg += " (r=" + std::to_string(v.r) + ", s=" + std::to_string(v.s) + ": " + v.reason + ")";
    }
    throw ValidationError(msg);
  }
  return b;
}

Matrix2 transition_matrix(const BundleSpec& b) {
  Matrix2 t;
  t[0][0] = LaurentPoly2::monomial(b.j(), 0);
  t[0][1] = b.p();
  t[1][1] = LaurentPoly2::monomial(-b.j(), 0);
  return t;
}

std::size_t h0_on_ell(int j, const LaurentPoly2& q, int t) {
  // Sections are pairs (a, b) of polynomials in z with
  //   z^(j-t) a + z^-t q b  and  z^(-j-t) b  polynomial in 1/z.
  const int b_top = j + t;
  int a_top = t - j;
  if (auto qs = q.max_s()) a_top = std::max(a_top, *qs + t);
  const std::size_t nb = b_top >= 0 ? static_cast<std::size_t>(b_top + 1) : 0;
  const std::size_t na = a_top >= 0 ? static_cast<std::size_t>(a_top + 1) : 0;
  const std::size_t cols = na + nb;
  if (cols == 0) return 0;

  // row per positive z-exponent of the first component
  std::map<int, SparseVector> rows;
  for (std::size_t i = 0; i < na; ++i) {
    const int e = static_cast<int>(i) + j - t;
    if (e > 0) rows[e].emplace_back(i, Rational(1));
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (const auto& [m, c] : q.terms()) {
      const int e = static_cast<int>(i) + m.s - t;
      if (e > 0) rows[e].emplace_back(na + i, c);
    }
  }
  std::vector<SparseVector> list;
  for (auto& [e, row] : rows) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    list.push_back(std::move(row));
  }
  return cols - rank(list, cols);
}

SplittingType splitting_type_on_ell(int k, int j, const LaurentPoly2& q) {
  SurfaceConfig::make(k);
  if (j < 0) throw ValidationError("j must be >= 0");
  for (const auto& [m, c] : q.terms()) {
    if (m.r != 0) throw ValidationError("restriction to l must not involve u");
  }
  std::vector<std::size_t> profile;
  for (int t = -j; t <= j; ++t) profile.push_back(h0_on_ell(j, q, t));
  auto expected = [](int a, int t) {
    return static_cast<std::size_t>(std::max(0, a + t + 1) + std::max(0, -a + t + 1));
  };
  for (int a = 0; a <= j; ++a) {
    bool match = true;
    for (int t = -j; t <= j && match; ++t) match = profile[static_cast<std::size_t>(t + j)] == expected(a, t);
    if (match) return SplittingType{{a, -a}};
  }
  throw std::logic_error("h0 profile matches no splitting type");
}

ExtensionClass scale(const ExtensionClass& ext, const Rational& lambda) {
  if (lambda.is_zero()) throw ValidationError("scaling factor must be nonzero");
  return ExtensionClass{ext.j, ext.p.scaled(lambda)};
}

BundleSpec scale(const BundleSpec& b, const Rational& lambda) {
  return BundleSpec::make(b.k(), b.j(), scale(b.ext(), lambda).p);
}

BundleSpec embed_phi(const BundleSpec& b) {
  LaurentPoly2 image = b.p().shifted(b.k(), 2);
  try {
    return BundleSpec::make(b.k(), b.j() + b.k(), std::move(image));
  } catch (const ValidationError& e) {
    throw std::logic_error(std::string("embedding left the canonical window: ") + e.what());
  }
}

std::string to_json(const BundleSpec& b) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : b.p().terms()) terms.push_back({{"r", m.r}, {"s", m.s}, {"c", c.str()}});
  nlohmann::json out = {{"k", b.k()}, {"j", b.j()}, {"p", terms}};
  return out.dump();
}

BundleSpec bundle_from_json(std::string_view text) {
  int k = 0, j = 0;
  LaurentPoly2 p;
  try {
    auto doc = nlohmann::json::parse(text);
    k = doc.at("k").get<int>();
    j = doc.at("j").get<int>();
    for (const auto& t : doc.at("p")) {
      const auto& c = t.at("c");
      Rational value = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>());
      p.add_term({t.at("s").get<int>(), t.at("r").get<int>()}, value);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad bundle JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad coefficient: ") + e.what());
  }
  return BundleSpec::make(k, j, std::move(p));
}

}  // namespace zk
