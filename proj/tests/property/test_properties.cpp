// Property tests over hand-rolled generators. Every generator is seeded, so
// failures reproduce; the case index is printed with each assertion.

#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "zk/balance.hpp"
#include "zk/invariants.hpp"

using zk::BundleSpec;
using zk::LaurentPoly2;
using zk::Rational;

namespace {

// Extension data (k, j, p) with k <= 3, j <= 5 and p a sparse combination
// of window monomials with small rational coefficients.
class BundleGen {
 public:
  explicit BundleGen(std::uint64_t seed) : rng_(seed) {}

  BundleSpec next() {
    const int k = 1 + static_cast<int>(rng_() % 3);
    const int j = 1 + static_cast<int>(rng_() % 5);
    const auto window = zk::canonical_window(k, j);
    LaurentPoly2 p;
    if (!window.empty()) {
      const int terms = static_cast<int>(rng_() % 4);
      for (int t = 0; t < terms; ++t) p.add_term(window[rng_() % window.size()], coefficient());
    }
    return BundleSpec::make(k, j, p);
  }

  Rational coefficient() {
    static const Rational values[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3, 4)};
    return values[rng_() % 5];
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

oracle::Poly to_oracle(const LaurentPoly2& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) out[{m.r, m.s}] = c.to_mpq();
  return out;
}

}  // namespace

TEST(Property, ScalingLeavesInvariantsUnchanged) {
  BundleGen gen(2024);
  for (int i = 0; i < 60; ++i) {
    const auto b = gen.next();
    const auto base = zk::invariants(b);
    for (const Rational& lambda : {Rational(2), Rational(-1), Rational(1, 3)}) {
      const auto scaled = zk::invariants(zk::scale(b, lambda));
      ASSERT_EQ(scaled.height, base.height) << "case " << i << " p=" << zk::format_laurent(b.p());
      ASSERT_EQ(scaled.width, base.width) << "case " << i << " p=" << zk::format_laurent(b.p());
    }
  }
}

TEST(Property, ChiIsHeightPlusWidthWithinSharpBounds) {
  BundleGen gen(99);
  for (int i = 0; i < 80; ++i) {
    const auto b = gen.next();
    const auto r = zk::invariants(b);
    ASSERT_EQ(r.chi, r.height + r.width);
    ASSERT_TRUE(r.in_bounds()) << "case " << i << " k=" << b.k() << " j=" << b.j() << " p=" << zk::format_laurent(b.p());
    if (b.k() == 1) ASSERT_GE(r.width, 1U);
    ASSERT_EQ(r.instanton, b.j() % b.k() == 0);
  }
}

TEST(Property, EnginesAgreeWithOracles) {
  BundleGen gen(7);
  for (int i = 0; i < 80; ++i) {
    const auto b = gen.next();
    const auto op = to_oracle(b.p());
    ASSERT_EQ(zk::height(b), oracle::height(b.k(), b.j(), op)) << "case " << i << " p=" << zk::format_laurent(b.p());
    ASSERT_EQ(zk::width(b), oracle::width(b.k(), b.j(), op)) << "case " << i << " p=" << zk::format_laurent(b.p());
  }
}

TEST(Property, EmbeddingStaysCanonicalAndDivisibleByU2) {
  BundleGen gen(31337);
  for (int i = 0; i < 200; ++i) {
    const auto b = gen.next();
    const auto e = zk::embed_phi(b);
    ASSERT_TRUE(zk::validate_canonical(e.k(), e.ext()).empty());
    ASSERT_EQ(e.j(), b.j() + b.k());
    for (const auto& [m, c] : e.p().terms()) ASSERT_GE(m.r, 2);
  }
}

TEST(Property, EmbeddedInvariantsAreScaleInvariant) {
  BundleGen gen(5);
  for (int i = 0; i < 15; ++i) {
    auto b = gen.next();
    if (b.j() > 3) b = BundleSpec::make(b.k(), 3, {});
    const auto e = zk::embed_phi(b);
    const auto base = zk::invariants(e);
    const auto scaled = zk::invariants(zk::scale(e, Rational(-2)));
    ASSERT_EQ(base.height, scaled.height);
    ASSERT_EQ(base.width, scaled.width);
  }
}

TEST(Property, BalanceAlwaysAdmissible) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const int k = 1 + static_cast<int>(rng() % 5);
    const std::size_t r = 2 + rng() % 5;
    std::vector<int> type(r);
    for (auto& x : type) x = static_cast<int>(rng() % 21) - 10;
    std::sort(type.begin(), type.end(), std::greater<>());
    const auto seq = zk::balance(k, type);
    const auto v = zk::validate_admissible(seq, k, type);
    ASSERT_TRUE(v.empty()) << "case " << i << ": " << v.front().condition << " " << v.front().detail;
  }
}

TEST(Property, BalanceRowSumsGrowByK) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<int> type{static_cast<int>(rng() % 21), -static_cast<int>(rng() % 21)};
    const auto seq = zk::balance(k, type);
    for (std::size_t row = 0; row < seq.rows.size(); ++row) {
      ASSERT_EQ(seq.rows[row][0] + seq.rows[row][1], type[0] + type[1] + k * static_cast<int>(row));
    }
    ASSERT_LE(seq.rows.back().front() - seq.rows.back().back(), k - 1);
  }
}
