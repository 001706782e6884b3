#include "zk/width.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "zk/errors.hpp"

namespace zk {

TransitionData TransitionData::from_bundle(const BundleSpec& b) {
  return TransitionData{b.k(), {b.j(), -b.j()}, b.p()};
}

TransitionData TransitionData::line_bundle(int k, int d) {
  SurfaceConfig::make(k);
  return TransitionData{k, {-d}, {}};
}

int TransitionData::p_max_s() const { return p.max_s().value_or(0); }

int TransitionData::pole_bound() const {
  int top = 0;
  for (int e : twist) top = std::max(top, std::abs(e));
  return ceil_div(top, k);
}

std::string format_section(const SectionVector& v) {
  std::string out = "(";
  for (std::size_t c = 0; c < v.size(); ++c) out += (c ? ", " : "") + format_laurent(v[c]);
  return out + ")";
}

std::vector<std::size_t> SectionBasis::dims_by_degree() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(truncation, 0) + 1), 0);
  for (int d : leading_degree) {
    if (d >= 0 && d <= truncation) ++out[static_cast<std::size_t>(d)];
  }
  return out;
}

namespace {

struct Coord {
  int c = 0;
  Monomial2 m;
};

// Coordinates of a finite window of SectionVectors. LowFirst puts low
// u-degrees first, so row echelon pivots sit at the lowest degree; TopFirst
// does the opposite.
class CoordIndex {
 public:
  enum class Order { LowFirst, TopFirst };

  CoordIndex(int rank, Order order) : rank_(rank), order_(order) {}

  void add_range(int c, int r, int s_lo, int s_hi) {
    for (int s = s_lo; s <= s_hi; ++s) coords_.push_back({c, {s, r}});
  }

  void finalize() {
    auto key = [this](const Coord& x) {
      return std::tuple(order_ == Order::LowFirst ? x.m.r : -x.m.r, x.m.s, x.c);
    };
    std::sort(coords_.begin(), coords_.end(), [&](const Coord& a, const Coord& b) { return key(a) < key(b); });
    for (std::size_t i = 0; i < coords_.size(); ++i) lookup_[{coords_[i].c, coords_[i].m}] = i;
  }

  int rank() const { return rank_; }
  std::size_t size() const { return coords_.size(); }
  const Coord& at(std::size_t i) const { return coords_[i]; }

  std::optional<std::size_t> find(int c, Monomial2 m) const {
    auto it = lookup_.find({c, m});
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  SectionVector to_section(const SparseVector& v) const {
    SectionVector out(static_cast<std::size_t>(rank_));
    for (const auto& [i, x] : v) out[static_cast<std::size_t>(coords_[i].c)].add_term(coords_[i].m, x);
    return out;
  }

  // Multiplies by z^ds u^dr. Returns nullopt if a term leaves the window
  // and `drop_above` does not cover it.
  std::optional<SparseVector> shifted(const SparseVector& v, int ds, int dr, std::optional<int> drop_above) const {
    SparseVector out;
    for (const auto& [i, x] : v) {
      Monomial2 m{coords_[i].m.s + ds, coords_[i].m.r + dr};
      if (drop_above && m.r > *drop_above) continue;
      auto j = find(coords_[i].c, m);
      if (!j) return std::nullopt;
      out.emplace_back(*j, x);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  int rank_;
  Order order_;
  std::vector<Coord> coords_;
  std::map<std::pair<int, Monomial2>, std::size_t> lookup_;
};

bool in_cone(int k, Monomial2 m) { return m.r >= 0 && m.s >= 0 && m.s <= k * m.r; }

// Upper z-exponent of component c of a section at u-degree r (lower is 0).
int section_top(const TransitionData& t, int c, int r) {
  int top = t.k * r - t.twist[static_cast<std::size_t>(c)];
  if (c == 0 && t.rank() == 2 && !t.p.is_zero()) top += std::max(0, t.p_max_s() - t.k - t.twist[1]);
  return top;
}

// Upper z-exponent of component c of a hom at u-degree r.
int hom_top(const TransitionData& t, int c, int r) {
  int top = t.k * r + t.twist[static_cast<std::size_t>(c)];
  if (c == 1 && !t.p.is_zero()) top = std::max(top, t.k * (r - 1) + t.p_max_s());
  return top;
}

CoordIndex section_window(const TransitionData& t, int r_lo, int r_hi, CoordIndex::Order order) {
  CoordIndex idx(t.rank(), order);
  for (int r = r_lo; r <= r_hi; ++r) {
    for (int c = 0; c < t.rank(); ++c) idx.add_range(c, r, 0, section_top(t, c, r));
  }
  idx.finalize();
  return idx;
}

CoordIndex hom_window(const TransitionData& t, int truncation) {
  CoordIndex idx(t.rank(), CoordIndex::Order::TopFirst);
  for (int r = -t.pole_bound(); r <= truncation; ++r) {
    for (int c = 0; c < t.rank(); ++c) idx.add_range(c, r, 0, hom_top(t, c, r));
  }
  idx.finalize();
  return idx;
}

// The rows of T, as linear forms in the U-frame components.
std::vector<SectionVector> chart_forms(const TransitionData& t) {
  std::vector<SectionVector> forms;
  if (t.rank() == 1) {
    forms.push_back({LaurentPoly2::monomial(t.twist[0], 0)});
  } else {
    forms.push_back({LaurentPoly2::monomial(t.twist[0], 0), t.p});
    forms.push_back({LaurentPoly2{}, LaurentPoly2::monomial(t.twist[1], 0)});
  }
  return forms;
}

using Allowed = std::function<bool(Monomial2)>;

// Echelon basis of {x in the window : every monomial of forms[l] . x outside
// `allowed` vanishes}, counting only monomials of u-degree <= max_r if given.
std::vector<SparseVector> solve(const CoordIndex& idx, const std::vector<SectionVector>& forms, const Allowed& allowed,
                                std::optional<int> max_r) {
  std::map<std::pair<std::size_t, Monomial2>, SparseVector> rows;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Coord& x = idx.at(i);
    for (std::size_t l = 0; l < forms.size(); ++l) {
      for (const auto& [m, c] : forms[l][static_cast<std::size_t>(x.c)].terms()) {
        Monomial2 prod{x.m.s + m.s, x.m.r + m.r};
        if (max_r && prod.r > *max_r) continue;
        if (allowed(prod)) continue;
        rows[{l, prod}].emplace_back(i, c);
      }
    }
  }
  RowReducer constraints(idx.size());
  for (auto& [key, row] : rows) constraints.insert(std::move(row));
  RowReducer echelon(idx.size());
  for (auto& v : constraints.kernel()) echelon.insert(std::move(v));
  std::vector<SparseVector> basis = echelon.rows();
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) { return a.front().first < b.front().first; });
  return basis;
}

// Greedy complement of span{x_i v : v in basis, x_i v inside the window}
// in span(basis), scanning basis vectors by pivot degree, then s.
std::vector<std::size_t> greedy_generators(int k, const CoordIndex& idx, const std::vector<SparseVector>& basis,
                                           std::optional<int> drop_above) {
  RowReducer span(idx.size());
  for (const auto& v : basis) {
    for (int i = 0; i <= k; ++i) {
      if (auto w = idx.shifted(v, i, 1, drop_above)) span.insert(std::move(*w));
    }
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // within one u-degree keep s ascending
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    int ra = idx.at(basis[a].front().first).m.r, rb = idx.at(basis[b].front().first).m.r;
    return ra < rb;
  });
  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    if (span.insert(basis[i])) chosen.push_back(i);
  }
  return chosen;
}

LaurentPoly2 pair(const SectionVector& a, const SectionVector& b) {
  LaurentPoly2 out;
  for (std::size_t c = 0; c < a.size() && c < b.size(); ++c) out += a[c] * b[c];
  return out;
}

bool is_exact_section(const TransitionData& t, const SectionVector& v) {
  for (const auto& form : chart_forms(t)) {
    const LaurentPoly2 image = pair(form, v);
    for (const auto& [m, c] : image.terms()) {
      if (m.s > t.k * m.r) return false;
    }
  }
  for (const auto& comp : v) {
    for (const auto& [m, c] : comp.terms()) {
      if (m.s < 0 || m.r < 0) return false;
    }
  }
  return true;
}

// Extends a section of l_D to Z_k: b stays, a absorbs the non-holomorphic
// part of p b above degree D.
SectionVector lift(const TransitionData& t, SectionVector v, int truncation) {
  if (t.rank() == 2 && !t.p.is_zero()) {
    const LaurentPoly2 pb = t.p * v[1];
    for (const auto& [m, c] : pb.terms()) {
      if (m.r <= truncation || m.s <= t.k * m.r) continue;
      if (m.s < t.twist[0]) throw std::logic_error("truncation too small to lift a section");
      v[0].add_term({m.s - t.twist[0], m.r}, -c);
    }
  }
  if (!is_exact_section(t, v)) throw std::logic_error("lifted section is not holomorphic");
  return v;
}

DualPresentation hom_space(const TransitionData& t, const CoordIndex& idx, const std::vector<ModuleGenerator>& source,
                           int truncation) {
  std::vector<SectionVector> forms;
  for (const auto& g : source) forms.push_back(g.value);
  const int k = t.k;
  const auto basis = solve(idx, forms, [k](Monomial2 m) { return in_cone(k, m); }, std::nullopt);

  DualPresentation out;
  out.k = t.k;
  out.truncation = truncation;
  out.pole_bound = t.pole_bound();
  out.space_dim = basis.size();
  out.dims_by_top_degree.assign(static_cast<std::size_t>(truncation + out.pole_bound + 1), 0);
  for (const auto& v : basis) ++out.dims_by_top_degree[static_cast<std::size_t>(idx.at(v.front().first).m.r + out.pole_bound)];

  for (std::size_t i : greedy_generators(t.k, idx, basis, std::nullopt)) {
    SectionVector value = idx.to_section(basis[i]);
    const int degree = idx.at(basis[i].front().first).m.r;
    std::vector<LaurentPoly2> images;
    for (const auto& g : source) images.push_back(pair(value, g.value));
    out.generators.push_back({degree, std::move(value)});
    out.images.push_back(std::move(images));
  }
  return out;
}

}  // namespace

SectionBasis section_basis(const TransitionData& t, int truncation) {
  const CoordIndex idx = section_window(t, 0, truncation, CoordIndex::Order::LowFirst);
  const int k = t.k;
  const auto basis = solve(idx, chart_forms(t), [k](Monomial2 m) { return m.s <= k * m.r; }, truncation);
  SectionBasis sb;
  sb.truncation = truncation;
  for (const auto& v : basis) {
    sb.basis.push_back(idx.to_section(v));
    sb.leading_degree.push_back(idx.at(v.front().first).m.r);
  }
  return sb;
}

SectionBasis section_basis(const BundleSpec& b, int truncation) {
  return section_basis(TransitionData::from_bundle(b), truncation);
}

ModulePresentation minimal_generators(const TransitionData& t, const SectionBasis& sb) {
  const CoordIndex idx = section_window(t, 0, sb.truncation, CoordIndex::Order::LowFirst);
  std::vector<SparseVector> basis;
  for (const auto& v : sb.basis) {
    SparseVector x;
    for (int c = 0; c < t.rank(); ++c) {
      for (const auto& [m, coef] : v[static_cast<std::size_t>(c)].terms()) {
        auto i = idx.find(c, m);
        if (!i) throw std::logic_error("section outside its window");
        x.emplace_back(*i, coef);
      }
    }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(x));
  }
  ModulePresentation mp;
  mp.k = t.k;
  mp.truncation = sb.truncation;
  for (std::size_t i : greedy_generators(t.k, idx, basis, sb.truncation)) {
    mp.generators.push_back({sb.leading_degree[i], lift(t, sb.basis[i], sb.truncation)});
  }
  return mp;
}

std::vector<Relation> syzygies(int k, const std::vector<ModuleGenerator>& gens, int max_degree) {
  struct Col {
    int degree;
    std::size_t gen;
    Monomial2 m;
  };
  std::vector<Col> cols;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (int d = 0; gens[g].degree + d <= max_degree; ++d) {
      for (const auto& m : cone_ring_basis(k, d)) cols.push_back({gens[g].degree + d, g, m});
    }
  }
  std::stable_sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) { return a.degree < b.degree; });
  std::map<std::pair<std::size_t, Monomial2>, std::size_t> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of[{cols[i].gen, cols[i].m}] = i;

  std::map<std::pair<std::size_t, Monomial2>, SparseVector> rows;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto& value = gens[cols[i].gen].value;
    for (std::size_t c = 0; c < value.size(); ++c) {
      for (const auto& [m, x] : value[c].terms()) rows[{c, {m.s + cols[i].m.s, m.r + cols[i].m.r}}].emplace_back(i, x);
    }
  }
  RowReducer eval(cols.size());
  for (auto& [key, row] : rows) eval.insert(std::move(row));
  std::vector<SparseVector> kernel = eval.kernel();
  // a kernel vector's last column is its free column, hence its degree
  std::stable_sort(kernel.begin(), kernel.end(),
                   [&](const auto& a, const auto& b) { return cols[a.back().first].degree < cols[b.back().first].degree; });

  std::vector<Relation> out;
  RowReducer span(cols.size());
  std::size_t pos = 0;
  while (pos < kernel.size()) {
    const int degree = cols[kernel[pos].back().first].degree;
    std::size_t end = pos;
    while (end < kernel.size() && cols[kernel[end].back().first].degree == degree) ++end;
    for (std::size_t i = pos; i < end; ++i) {
      if (!span.insert(kernel[i])) continue;
      std::vector<LaurentPoly2> coeffs(gens.size());
      for (const auto& [c, x] : kernel[i]) coeffs[cols[c].gen].add_term(cols[c].m, x);
      Relation rel{degree, {}};
      for (auto& poly : coeffs) rel.coefficients.emplace_back(k, std::move(poly));
      out.push_back(std::move(rel));
    }
    if (degree < max_degree) {
      for (std::size_t i = pos; i < end; ++i) {
        for (int xi = 0; xi <= k; ++xi) {
          SparseVector w;
          for (const auto& [c, x] : kernel[i]) w.emplace_back(col_of.at({cols[c].gen, {cols[c].m.s + xi, cols[c].m.r + 1}}), x);
          std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          span.insert(std::move(w));
        }
      }
    }
    pos = end;
  }
  return out;
}

void compute_relations(ModulePresentation& mp, int max_degree) {
  mp.relations = syzygies(mp.k, mp.generators, max_degree);
}

DualPresentation dual_module(const TransitionData& t, const ModulePresentation& mp, int truncation) {
  DualPresentation d = hom_space(t, hom_window(t, truncation), mp.generators, truncation);
  return d;
}

DualPresentation double_dual(const TransitionData& t, const DualPresentation& dual, int truncation) {
  const CoordIndex idx = section_window(t, -t.pole_bound(), truncation, CoordIndex::Order::TopFirst);
  return hom_space(t, idx, dual.generators, truncation);
}

DualPresentation dual_of_hull(const TransitionData& t, const DualPresentation& hull, int truncation) {
  return hom_space(t, hom_window(t, truncation), hull.generators, truncation);
}

std::vector<SectionVector> bounded_sections(const TransitionData& t, int truncation) {
  const CoordIndex idx = section_window(t, 0, truncation, CoordIndex::Order::LowFirst);
  const int k = t.k;
  std::vector<SectionVector> out;
  for (const auto& v : solve(idx, chart_forms(t), [k](Monomial2 m) { return m.s <= k * m.r; }, std::nullopt)) {
    out.push_back(idx.to_section(v));
  }
  return out;
}

int default_width_truncation(const TransitionData& t) {
  int j = 0;
  for (int e : t.twist) j = std::max(j, std::abs(e));
  const int n = finite_neighborhood_order(t.k, j);
  const int n1 = floor_div(j - 2, t.k);
  return std::max(n + t.k + 2, n + n1 + 1);
}

namespace {

WidthResult width_at(const TransitionData& t, int truncation, bool with_relations) {
  WidthResult res;
  res.truncation = truncation;
  res.module = minimal_generators(t, section_basis(t, truncation));
  if (with_relations) compute_relations(res.module, truncation);
  res.dual = dual_module(t, res.module, truncation);
  res.hull = double_dual(t, res.dual, truncation);
  if (with_relations) {
    res.dual.relations = syzygies(t.k, res.dual.generators, truncation);
    res.hull.relations = syzygies(t.k, res.hull.generators, truncation);
  }
  const auto sections = bounded_sections(t, truncation);
  // rho is the inclusion M -> M^vv; every section must pair into k_0
  for (const auto& s : sections) {
    for (const auto& phi : res.dual.generators) {
      const LaurentPoly2 value = pair(phi.value, s);
      for (const auto& [m, c] : value.terms()) {
        if (!in_cone(t.k, m)) throw std::logic_error("section outside the reflexive hull: " + format_section(s));
      }
    }
  }
  res.section_dim = sections.size();
  res.hull_dim = res.hull.space_dim;
  if (res.hull_dim < res.section_dim) throw std::logic_error("hull smaller than the section space");
  res.width = res.hull_dim - res.section_dim;
  return res;
}

}  // namespace

WidthResult width_detailed(const TransitionData& t, const WidthOptions& opts) {
  if (t.rank() < 1 || t.rank() > 2) throw ValidationError("rank must be 1 or 2");
  const int d0 = default_width_truncation(t);
  int truncation = opts.truncation >= 0 ? opts.truncation : d0;
  truncation = std::max(truncation, floor_div(std::max(t.twist[0], 0) - 2, t.k));
  if (!opts.verify_stable) return width_at(t, truncation, opts.with_relations);

  const int cap = std::max(truncation, d0) + 2 * d0;
  WidthResult current = width_at(t, truncation, opts.with_relations);
  while (truncation < cap) {
    WidthResult next = width_at(t, truncation + 1, false);
    if (next.width == current.width) return current;
    current = width_at(t, truncation + 1, opts.with_relations);
    ++truncation;
  }
  throw StabilisationError("width did not stabilise by truncation " + std::to_string(cap));
}

WidthResult width_detailed(const BundleSpec& b, const WidthOptions& opts) {
  return width_detailed(TransitionData::from_bundle(b), opts);
}

std::size_t width(const BundleSpec& b, const WidthOptions& opts) { return width_detailed(b, opts).width; }

std::size_t width_line_bundle(int k, int d) {
  SurfaceConfig::make(k);
  if (d < 0) return 0;
  const int n2 = d / k;
  return static_cast<std::size_t>((d + 1) * n2 - k * n2 * (n2 + 1) / 2);
}

namespace {

nlohmann::json generators_json(const std::vector<ModuleGenerator>& gens) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : gens) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : g.value) comps.push_back(format_laurent(c));
    out.push_back({{"degree", g.degree}, {"value", comps}});
  }
  return out;
}

nlohmann::json relations_json(const std::vector<Relation>& rels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rels) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : r.coefficients) coeffs.push_back(format_laurent(c.poly()));
    out.push_back({{"degree", r.degree}, {"coefficients", coeffs}});
  }
  return out;
}

nlohmann::json dual_json(const DualPresentation& d) {
  return {{"pole_bound", d.pole_bound},
          {"space_dim", d.space_dim},
          {"dims_by_top_degree", d.dims_by_top_degree},
          {"generators", generators_json(d.generators)},
          {"relations", relations_json(d.relations)}};
}

}  // namespace

std::string presentation_json(const WidthResult& r) {
  nlohmann::json out = {
      {"truncation", r.truncation},
      {"width", r.width},
      {"section_dim", r.section_dim},
      {"hull_dim", r.hull_dim},
      {"module", {{"generators", generators_json(r.module.generators)}, {"relations", relations_json(r.module.relations)}}},
      {"dual", dual_json(r.dual)},
      {"double_dual", dual_json(r.hull)},
  };
  return out.dump(2);
}

}  // namespace zk
