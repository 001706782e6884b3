#include "zk/selftest.hpp"

#include <functional>
#include <sstream>

#include "zk/balance.hpp"
#include "zk/strata.hpp"

namespace zk {

namespace {

class Suite {
 public:
  void check(const std::string& name, const std::function<std::string()>& body) {
    SelfTestCase c{name, false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    cases_.push_back(std::move(c));
  }

  std::vector<SelfTestCase> take() { return std::move(cases_); }

 private:
  std::vector<SelfTestCase> cases_;
};

template <class A, class B>
std::string expect_eq(const A& got, const B& want) {
  if (got == want) return {};
  std::ostringstream os;
  os << "got " << got << ", expected " << want;
  return os.str();
}

std::string expect_hw(int k, int j, const char* p, std::size_t h, std::size_t w) {
  const auto b = BundleSpec::make(k, j, parse_laurent(p));
  const std::size_t gh = height(b), gw = width(b);
  if (gh == h && gw == w) return {};
  std::ostringstream os;
  os << "(h,w)=(" << gh << "," << gw << "), expected (" << h << "," << w << ")";
  return os.str();
}

}  // namespace

std::vector<SelfTestCase> run_selftest() {
  Suite s;

  s.check("Z_2, j=3, p=zu has (h,w)=(2,0)", [] { return expect_hw(2, 3, "z*u", 2, 0); });
  s.check("Z_2, j=3, p=u has (h,w)=(2,1)", [] { return expect_hw(2, 3, "u", 2, 1); });
  s.check("Z_2, j=3, p=z^2u has (h,w)=(2,1)", [] { return expect_hw(2, 3, "z^2*u", 2, 1); });
  s.check("Z_2, j=3, p=z^2u^2 has (h,w)=(2,2)", [] { return expect_hw(2, 3, "z^2*u^2", 2, 2); });
  s.check("Z_2, j=3, split has (h,w)=(2,2)", [] { return expect_hw(2, 3, "0", 2, 2); });
  s.check("Z_1, j=3, p=zu has h=j-1", [] { return expect_hw(1, 3, "z*u", 2, 1); });

  s.check("w_2(O(-3)) = 0", [] { return expect_eq(width_detailed(TransitionData::line_bundle(2, -3)).width, 0U); });
  s.check("O(-3) on Z_2 is generated by u^2, zu^2", [] {
    const auto r = width_detailed(TransitionData::line_bundle(2, -3));
    std::string got;
    for (const auto& g : r.module.generators) got += format_section(g.value);
    return expect_eq(got, std::string("(u^2)(z*u^2)"));
  });

  s.check("charge 7 point on Z_3", [] {
    const auto r = invariants(BundleSpec::make(3, 6, parse_laurent("z^-1*u + z^4*u^2")));
    return expect_eq(r.chi, 7U);
  });
  s.check("[[z^2, z],[0, z^-2]] has splitting type 1 on Z_1", [] {
    return expect_eq(splitting_type_on_ell(1, 2, parse_laurent("z")).degrees.front(), 1);
  });
  s.check("cone ring degree 1 on Z_2 is u, zu, z^2u", [] {
    std::string got;
    for (const auto& m : cone_ring_basis(2, 1)) got += format_laurent(LaurentPoly2::monomial(m.s, m.r)) + " ";
    return expect_eq(got, std::string("u z*u z^2*u "));
  });
  s.check("w_5(O(-7)) = 0", [] { return expect_eq(width_line_bundle(5, -7), 0U); });
  s.check("chi bounds on Z_1, j=3 are [3, 9]", [] {
    const auto b = bounds_chi(1, 3);
    return expect_eq(b.lo * 100 + b.hi, 309L);
  });
  s.check("width bounds vanish for 0 < j < k", [] { return expect_eq(bounds_width(5, 3).hi, 0L); });
  s.check("charges 1 and 4 are gaps on Z_3", [] {
    const auto [a, b] = charge_gap_ranges(3);
    return expect_eq(a.lo * 1000 + a.hi * 100 + b.lo * 10 + b.hi, 1144L);
  });

  s.check("Z_1, j=3 grid over {0,1}: chi=3 as (w,h)=(1,2), chi=5 as (3,2) and (2,3)", [] {
    ScanOptions opts;
    const auto t = scan_strata(1, 3, opts);
    const bool ok = t.strata.count({2, 1}) && t.strata.count({2, 3}) && t.strata.count({3, 2});
    return ok ? std::string() : std::string("missing stratum");
  });
  s.check("Z_3, j=3 grid over {0,1,-1} avoids charges 1 and 4", [] {
    ScanOptions opts;
    opts.coefficients = {Rational(0), Rational(1), Rational(-1)};
    for (const auto& [hw, idx] : scan_strata(3, 3, opts).strata) {
      const auto chi = hw.first + hw.second;
      if (chi == 1 || chi == 4) return "charge " + std::to_string(chi) + " occurs";
    }
    return std::string();
  });

  s.check("split height and width match the line bundle formulas (k<=3, j<=6)", [] {
    for (int k = 1; k <= 3; ++k) {
      for (int j = 0; j <= 6; ++j) {
        const auto b = BundleSpec::split(k, j);
        if (height(b) != height_line_bundle(k, -j) + height_line_bundle(k, j) ||
            width(b) != width_line_bundle(k, j) + width_line_bundle(k, -j)) {
          return "mismatch at k=" + std::to_string(k) + " j=" + std::to_string(j);
        }
      }
    }
    return std::string();
  });
  s.check("height of holomorphic monomials matches the closed form (k<=3, j<=6)", [] {
    for (int k = 1; k <= 3; ++k) {
      for (int j = 2; j <= 6; ++j) {
        for (const auto& m : canonical_window(k, j)) {
          if (!is_cone_monomial(k, m)) continue;
          const auto b = BundleSpec::make(k, j, LaurentPoly2::monomial(m.s, m.r));
          if (height(b) != height_nonsplit_closed_form(k, j, m.r)) {
            return "mismatch at k=" + std::to_string(k) + " j=" + std::to_string(j) + " p=" +
                   format_laurent(b.p());
          }
        }
      }
    }
    return std::string();
  });
  s.check("balancing (3,-3) on Z_2 takes 4 rows", [] {
    const auto seq = balance(2, {3, -3});
    if (!validate_admissible(seq, 2, std::vector<int>{3, -3}).empty()) return std::string("not admissible");
    return expect_eq(seq.t(), 4);
  });

  return s.take();
}

}  // namespace zk
