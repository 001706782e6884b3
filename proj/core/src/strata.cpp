#include "zk/strata.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "zk/errors.hpp"

namespace zk {

namespace {

std::vector<Rational> normalized(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return b > std::numeric_limits<std::size_t>::max() - a ? std::numeric_limits<std::size_t>::max() : a + b;
}

void enumerate(const std::vector<Rational>& values, std::size_t n, int budget, std::vector<Rational>& current,
               std::vector<std::vector<Rational>>& out) {
  if (current.size() == n) {
    out.push_back(current);
    return;
  }
  for (const Rational& v : values) {
    const bool nonzero = !v.is_zero();
    if (nonzero && budget == 0) continue;
    current.push_back(v);
    enumerate(values, n, nonzero && budget > 0 ? budget - 1 : budget, current, out);
    current.pop_back();
  }
}

std::string describe_grid(const std::vector<Rational>& values, int max_terms) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i].str();
  out += "}^window";
  if (max_terms >= 0) out += ", at most " + std::to_string(max_terms) + " nonzero terms";
  return out;
}

}  // namespace

std::size_t grid_size(std::size_t window_size, const std::vector<Rational>& coefficients, int max_terms) {
  const auto values = normalized(coefficients);
  const bool has_zero = std::any_of(values.begin(), values.end(), [](const Rational& v) { return v.is_zero(); });
  const std::size_t nz = values.size() - (has_zero ? 1 : 0);
  const std::size_t cap = max_terms < 0 ? window_size : std::min<std::size_t>(window_size, static_cast<std::size_t>(max_terms));
  if (!has_zero) {
    if (cap < window_size) return 0;
    std::size_t total = 1;
    for (std::size_t i = 0; i < window_size; ++i) total = saturating_mul(total, nz);
    return total;
  }
  // sum over t <= cap of C(n, t) nz^t
  std::size_t total = 0, binom = 1, power = 1;
  for (std::size_t t = 0; t <= cap; ++t) {
    total = saturating_add(total, saturating_mul(binom, power));
    if (t == cap) break;
    // C(n, t+1) = C(n, t) (n - t) / (t + 1); exact in this order
    const std::size_t next = saturating_mul(binom, window_size - t);
    binom = next == std::numeric_limits<std::size_t>::max() ? next : next / (t + 1);
    power = saturating_mul(power, nz);
  }
  return total;
}

std::size_t StratumTable::failures() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const ScanPoint& p) { return !p.report; }));
}

std::size_t StratumTable::bound_violations() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const ScanPoint& p) { return p.report && !p.report->in_bounds(); }));
}

std::optional<std::pair<std::size_t, std::size_t>> StratumTable::generic() const {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_count = 0;
  for (const auto& [hw, idx] : strata) {
    if (idx.size() > best_count) {
      best = hw;
      best_count = idx.size();
    }
  }
  return best;
}

StratumTable scan_strata(int k, int j, const ScanOptions& opts) {
  SurfaceConfig::make(k);
  if (j < 0) throw ValidationError("j must be >= 0");
  const auto values = normalized(opts.coefficients);
  if (values.empty()) throw ValidationError("empty coefficient set");

  StratumTable table;
  table.k = k;
  table.j = j;
  table.window = canonical_window(k, j);
  table.grid = describe_grid(values, opts.max_terms);
  const std::size_t n = table.window.size();
  const std::size_t size = grid_size(n, values, opts.max_terms);
  if (size > opts.max_points) {
    throw ValidationError("grid has " + (size == std::numeric_limits<std::size_t>::max() ? std::string("too many")
                                                                                           : std::to_string(size)) +
                          " points, above the limit of " + std::to_string(opts.max_points));
  }

  std::vector<std::vector<Rational>> grid;
  grid.reserve(size);
  std::vector<Rational> current;
  enumerate(values, n, opts.max_terms < 0 ? -1 : opts.max_terms, current, grid);
  if (opts.up_to_sign) {
    auto on_grid = [&](const Rational& v) { return std::binary_search(values.begin(), values.end(), v); };
    std::erase_if(grid, [&](const std::vector<Rational>& point) {
      auto lead = std::find_if(point.begin(), point.end(), [](const Rational& v) { return !v.is_zero(); });
      if (lead == point.end() || lead->sign() > 0) return false;
      return std::all_of(point.begin(), point.end(), [&](const Rational& v) { return on_grid(-v); });
    });
    table.grid += ", up to sign";
  }

  table.points.resize(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      ScanPoint& pt = table.points[i];
      pt.coeffs = std::move(grid[i]);
      for (std::size_t w = 0; w < n; ++w) pt.p.add_term(table.window[w], pt.coeffs[w]);
      try {
        pt.report = invariants(BundleSpec::make(k, j, pt.p), opts.engine);
      } catch (const std::exception& e) {
        pt.error = e.what();
      }
    }
  };
  unsigned workers = opts.workers ? opts.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(grid.size(), 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < table.points.size(); ++i) {
    const auto& rep = table.points[i].report;
    if (rep) table.strata[{rep->height, rep->width}].push_back(i);
  }
  return table;
}

std::string to_csv(const StratumTable& t) {
  std::ostringstream os;
  os << "k,j,p,height,width,chi,instanton,in_bounds\n";
  for (const auto& pt : t.points) {
    if (!pt.report) continue;
    const auto& r = *pt.report;
    os << t.k << "," << t.j << "," << format_laurent(pt.p) << "," << r.height << "," << r.width << "," << r.chi << ","
       << (r.instanton ? "true" : "false") << "," << (r.in_bounds() ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string to_json(const StratumTable& t) {
  nlohmann::json points = nlohmann::json::array();
  nlohmann::json errors = nlohmann::json::array();
  for (const auto& pt : t.points) {
    if (!pt.report) {
      errors.push_back({{"p", format_laurent(pt.p)}, {"error", pt.error}});
      continue;
    }
    const auto& r = *pt.report;
    points.push_back({{"k", t.k},
                      {"j", t.j},
                      {"p", format_laurent(pt.p)},
                      {"height", r.height},
                      {"width", r.width},
                      {"chi", r.chi},
                      {"instanton", r.instanton},
                      {"in_bounds", r.in_bounds()}});
  }
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& [hw, idx] : t.strata) {
    strata.push_back({{"height", hw.first},
                      {"width", hw.second},
                      {"chi", hw.first + hw.second},
                      {"count", idx.size()},
                      {"representative", format_laurent(t.points[idx.front()].p)}});
  }
  nlohmann::json out = {{"k", t.k}, {"j", t.j}, {"grid", t.grid}, {"points", points}, {"strata", strata}, {"errors", errors}};
  if (auto g = t.generic()) {
    out["generic"] = {{"height", g->first},
                      {"width", g->second},
                      {"caveat", "most frequent value on a finite grid; genericity is heuristic"}};
  }
  return out.dump(2);
}

std::string to_text(const StratumTable& t) {
  std::ostringstream os;
  os << "k=" << t.k << " j=" << t.j << " grid " << t.grid << ": " << t.points.size() << " points, "
     << t.strata.size() << " strata\n";
  for (const auto& [hw, idx] : t.strata) {
    os << "  (h,w)=(" << hw.first << "," << hw.second << ") chi=" << hw.first + hw.second << " count=" << idx.size()
       << " representative p=" << format_laurent(t.points[idx.front()].p) << "\n";
  }
  if (auto g = t.generic()) {
    os << "generic (most frequent, heuristic): (h,w)=(" << g->first << "," << g->second << ")\n";
  }
  for (const auto& pt : t.points) {
    if (!pt.report) os << "error at p=" << format_laurent(pt.p) << ": " << pt.error << "\n";
  }
  if (auto v = t.bound_violations()) os << v << " bound violations\n";
  return os.str();
}

}  // namespace zk
