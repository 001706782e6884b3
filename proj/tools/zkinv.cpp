// zkinv: invariants of rank-2 bundles on Z_k from the command line.
//
// Exit codes: 0 success, 1 engine or selftest failure, 2 parse/usage error,
// 3 validation error, 4 stabilisation failure.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zk/balance.hpp"
#include "zk/errors.hpp"
#include "zk/invariants.hpp"
#include "zk/selftest.hpp"
#include "zk/strata.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kInvalid = 3, kUnstable = 4 };

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw zk::ParseError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw zk::ParseError("empty list");
  return out;
}

std::vector<zk::Rational> parse_coeffs(const std::string& text) {
  std::vector<zk::Rational> out;
  for (const auto& item : split_list(text)) {
    try {
      out.push_back(zk::Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw zk::ParseError("bad coefficient '" + item + "': " + e.what());
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw zk::ParseError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string report_csv(const zk::InvariantReport& r) {
  std::ostringstream os;
  os << "k,j,p,height,width,chi,instanton,in_bounds\n"
     << r.k << "," << r.j << "," << zk::format_laurent(r.p) << "," << r.height << "," << r.width << "," << r.chi << ","
     << (r.instanton ? "true" : "false") << "," << (r.in_bounds() ? "true" : "false") << "\n";
  return os.str();
}

struct Params {
  int k = 1;
  int j = 0;
  std::string p = "0";
  std::string coeffs = "0,1";
  int max_terms = -1;
  std::size_t max_points = 1'000'000;
  std::string format = "text";
  bool dump = false;
  int window_scale = 1;
  std::string type;
};

int cmd_invariants(const Params& a) {
  const auto b = zk::BundleSpec::make(a.k, a.j, zk::parse_laurent(a.p));
  zk::InvariantOptions opts;
  opts.height.window_scale = a.window_scale;
  opts.width.with_relations = a.dump;
  const auto report = zk::invariants(b, opts);
  std::string dump;
  if (a.dump) dump = zk::presentation_json(zk::width_detailed(b, opts.width));
  if (a.format == "json") {
    auto doc = nlohmann::json::parse(zk::report_json(report));
    if (a.dump) doc["presentations"] = nlohmann::json::parse(dump);
    std::cout << doc.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << report_csv(report);
    if (a.dump) std::cerr << dump << "\n";
  } else {
    std::cout << zk::report_text(report);
    if (a.dump) std::cout << dump << "\n";
  }
  return report.in_bounds() ? kOk : kFailure;
}

int cmd_scan(const Params& a) {
  zk::ScanOptions opts;
  opts.coefficients = parse_coeffs(a.coeffs);
  opts.max_terms = a.max_terms;
  opts.max_points = a.max_points;
  opts.engine.height.window_scale = a.window_scale;
  const auto table = zk::scan_strata(a.k, a.j, opts);
  if (a.format == "json") {
    std::cout << zk::to_json(table) << "\n";
  } else if (a.format == "csv") {
    std::cout << zk::to_csv(table);
  } else {
    std::cout << zk::to_text(table);
  }
  for (const auto& pt : table.points) {
    if (!pt.report) std::cerr << "error at p=" << zk::format_laurent(pt.p) << ": " << pt.error << "\n";
  }
  return table.failures() == 0 && table.bound_violations() == 0 ? kOk : kFailure;
}

int cmd_balance(const Params& a) {
  const auto type = parse_ints(a.type);
  const auto seq = zk::balance(a.k, type);
  if (a.format == "json") {
    std::cout << zk::to_json(seq) << "\n";
  } else if (a.format == "csv") {
    std::cout << "i";
    for (int l = 1; l <= seq.rank(); ++l) std::cout << ",j" << l;
    std::cout << "\n";
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
      std::cout << i + 1;
      for (int v : seq.rows[i]) std::cout << "," << v;
      std::cout << "\n";
    }
  } else {
    std::cout << zk::to_text(seq);
  }
  return zk::validate_admissible(seq, a.k, type).empty() ? kOk : kFailure;
}

int cmd_bounds(const Params& a) {
  const auto h = zk::bounds_height(a.k, a.j);
  const auto w = zk::bounds_width(a.k, a.j);
  const auto c = zk::bounds_chi(a.k, a.j);
  const auto [g1, g2] = zk::charge_gap_ranges(a.k);
  if (a.format == "json") {
    nlohmann::json out = {{"k", a.k},
                          {"j", a.j},
                          {"height", {h.lo, h.hi}},
                          {"width", {w.lo, w.hi}},
                          {"chi", {c.lo, c.hi}},
                          {"charge_gaps", {{g1.lo, g1.hi}, {g2.lo, g2.hi}}}};
    std::cout << out.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "k,j,h_lo,h_hi,w_lo,w_hi,chi_lo,chi_hi\n"
              << a.k << "," << a.j << "," << h.lo << "," << h.hi << "," << w.lo << "," << w.hi << "," << c.lo << ","
              << c.hi << "\n";
  } else {
    std::cout << "height in [" << h.lo << ", " << h.hi << "]\n"
              << "width  in [" << w.lo << ", " << w.hi << "]\n"
              << "chi    in [" << c.lo << ", " << c.hi << "]\n";
    auto range = [](const zk::Bounds& b) {
      return b.lo > b.hi ? std::string("none") : "[" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]";
    };
    std::cout << "charge gaps: " << range(g1) << " and " << range(g2) << "\n";
  }
  return kOk;
}

int cmd_embed(const Params& a) {
  const auto image = zk::embed_phi(zk::BundleSpec::make(a.k, a.j, zk::parse_laurent(a.p)));
  if (a.format == "json") {
    std::cout << nlohmann::json::parse(zk::to_json(image)).dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "k,j,p\n" << image.k() << "," << image.j() << "," << zk::format_laurent(image.p()) << "\n";
  } else {
    std::cout << "k=" << image.k() << " j=" << image.j() << " p=" << zk::format_laurent(image.p()) << "\n";
  }
  return kOk;
}

int cmd_selftest(const Params& a) {
  const auto cases = zk::run_selftest();
  std::size_t failed = 0;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cases) {
    failed += c.passed ? 0 : 1;
    if (a.format == "json") {
      out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
  }
  if (a.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << cases.size() - failed << "/" << cases.size() << " passed\n";
  }
  return failed == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical invariants of rank-2 bundles on Z_k = Tot O(-k)"};
  app.require_subcommand(1);
  Params a;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_kj = [&](CLI::App* sub) {
    sub->add_option("--k", a.k, "Self-intersection -k of the zero section")->required();
    sub->add_option("--j", a.j, "Splitting type")->required();
  };

  auto* inv = app.add_subcommand("invariants", "Height, width and chi of one bundle");
  add_kj(inv);
  inv->add_option("--p", a.p, "Extension class, e.g. \"z^-1*u + z^4*u^2\"; 0 is the split bundle");
  inv->add_flag("--dump-presentations", a.dump, "Print module, dual and hull presentations");
  inv->add_option("--window-scale", a.window_scale, "Multiplier on the height enumeration window")
      ->check(CLI::PositiveNumber);
  add_format(inv);

  auto* scan = app.add_subcommand("scan", "Group a coefficient grid by (height, width)");
  add_kj(scan);
  scan->add_option("--coeffs", a.coeffs, "Comma separated coefficient values");
  scan->add_option("--max-terms", a.max_terms, "Skip points with more nonzero coefficients");
  scan->add_option("--max-points", a.max_points, "Refuse larger grids");
  scan->add_option("--window-scale", a.window_scale, "Multiplier on the height enumeration window")
      ->check(CLI::PositiveNumber);
  add_format(scan);

  auto* bal = app.add_subcommand("balance", "Balance a splitting type");
  bal->add_option("--k", a.k, "k")->required();
  bal->add_option("--type", a.type, "Nonincreasing splitting type, e.g. 3,-3")->required();
  add_format(bal);

  auto* bnd = app.add_subcommand("bounds", "Sharp bounds on height, width and chi");
  add_kj(bnd);
  add_format(bnd);

  auto* emb = app.add_subcommand("embed", "Apply (k, j, p) -> (k, j + k, z^k u^2 p)");
  add_kj(emb);
  emb->add_option("--p", a.p, "Extension class");
  add_format(emb);

  auto* self = app.add_subcommand("selftest", "Run the regression suite");
  add_format(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*inv) return cmd_invariants(a);
    if (*scan) return cmd_scan(a);
    if (*bal) return cmd_balance(a);
    if (*bnd) return cmd_bounds(a);
    if (*emb) return cmd_embed(a);
    if (*self) return cmd_selftest(a);
  } catch (const zk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const zk::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const zk::StabilisationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUnstable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
