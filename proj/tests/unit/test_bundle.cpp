#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "zk/bundle.hpp"
#include "zk/errors.hpp"

using zk::BundleSpec;
using zk::LaurentPoly2;
using zk::parse_laurent;
using zk::Rational;

TEST(FiniteNeighborhood, Order) {
  EXPECT_EQ(zk::finite_neighborhood_order(2, 3), 2);
  EXPECT_EQ(zk::finite_neighborhood_order(1, 1), 0);
  EXPECT_EQ(zk::finite_neighborhood_order(3, 6), 3);
  EXPECT_EQ(zk::finite_neighborhood_order(2, 0), 0);
}

TEST(CanonicalWindow, Validation) {
  EXPECT_TRUE(zk::validate_canonical(2, {3, parse_laurent("z*u")}).empty());
  EXPECT_TRUE(zk::validate_canonical(3, {6, parse_laurent("z^-1*u + z^4*u^2")}).empty());
  const auto bad = zk::validate_canonical(1, {2, parse_laurent("z")});
  ASSERT_EQ(bad.size(), 1U);
  EXPECT_EQ(bad[0].r, 0);
  EXPECT_EQ(bad[0].s, 1);
  EXPECT_THROW(BundleSpec::make(1, 2, parse_laurent("z")), zk::ValidationError);
  EXPECT_THROW(BundleSpec::make(3, 6, parse_laurent("z^-3*u")), zk::ValidationError);
  EXPECT_THROW(BundleSpec::make(2, -1, {}), zk::ValidationError);
}

TEST(CanonicalWindow, EnumerationMatchesDefinition) {
  for (int k = 1; k <= 3; ++k) {
    for (int j = 0; j <= 6; ++j) {
      const int n = zk::finite_neighborhood_order(k, j);
      std::size_t count = 0;
      for (int r = 1; r <= n; ++r) count += static_cast<std::size_t>(std::max(0, (j - 1) - (k * r - j + 1) + 1));
      EXPECT_EQ(zk::canonical_window(k, j).size(), count) << k << " " << j;
    }
  }
  EXPECT_EQ(zk::canonical_window(2, 3).size(), 4U);
}

TEST(TransitionMatrix, Examples) {
  const auto id = zk::transition_matrix(BundleSpec::split(3, 0));
  EXPECT_EQ(id[0][0], LaurentPoly2::constant(1));
  EXPECT_EQ(id[1][1], LaurentPoly2::constant(1));
  EXPECT_TRUE(id[0][1].is_zero());
  const auto t = zk::transition_matrix(BundleSpec::make(2, 3, parse_laurent("z*u")));
  EXPECT_EQ(t[0][0], parse_laurent("z^3"));
  EXPECT_EQ(t[0][1], parse_laurent("z*u"));
  EXPECT_TRUE(t[1][0].is_zero());
  EXPECT_EQ(t[1][1], parse_laurent("z^-3"));
  EXPECT_EQ(zk::transition_matrix(BundleSpec::split(1, 2))[0][0], parse_laurent("z^2"));
}

TEST(SplittingType, Examples) {
  EXPECT_EQ(zk::splitting_type_on_ell(1, 2, parse_laurent("z")).degrees, (std::vector<int>{1, -1}));
  for (int j = 0; j <= 5; ++j) EXPECT_EQ(zk::splitting_type_on_ell(2, j, {}).degrees, (std::vector<int>{j, -j}));
  // value frozen from the dense h^0 oracle
  EXPECT_EQ(zk::splitting_type_on_ell(1, 3, parse_laurent("z + z^2")).degrees, (std::vector<int>{1, -1}));
  EXPECT_THROW(zk::splitting_type_on_ell(1, 3, parse_laurent("u")), zk::ValidationError);
}

TEST(SplittingType, AgreesWithDenseOracle) {
  for (int j = 0; j <= 4; ++j) {
    for (int mask = 0; mask < 16; ++mask) {
      LaurentPoly2 q;
      std::map<int, mpq_class> oq;
      for (int e = 0; e < 4; ++e) {
        if (mask & (1 << e)) {
          q.add_term({e - 1, 0}, Rational(e + 1));
          oq[e - 1] = e + 1;
        }
      }
      EXPECT_EQ(zk::splitting_type_on_ell(1, j, q).degrees.front(), oracle::splitting_type(j, oq))
          << "j=" << j << " q=" << zk::format_laurent(q);
    }
  }
}

TEST(SplittingType, TermsDivisibleByUVanishOnEll) {
  for (int k = 1; k <= 3; ++k) {
    for (int j = 1; j <= 5; ++j) {
      for (const auto& m : zk::canonical_window(k, j)) {
        const auto q = LaurentPoly2::monomial(m.s, m.r).restrict_to_ell();
        EXPECT_EQ(zk::splitting_type_on_ell(k, j, q).degrees, (std::vector<int>{j, -j}));
      }
    }
  }
}

TEST(Scale, Examples) {
  const zk::ExtensionClass zu{3, parse_laurent("z*u")};
  EXPECT_EQ(zk::scale(zu, Rational(1)).p, zu.p);
  EXPECT_EQ(zk::scale(zu, Rational(-2)).p, parse_laurent("-2*z*u"));
  EXPECT_EQ(zk::scale(zk::ExtensionClass{6, parse_laurent("z^-1*u + z^4*u^2")}, Rational(1, 3)).p,
            parse_laurent("1/3*z^-1*u + 1/3*z^4*u^2"));
  EXPECT_THROW(zk::scale(zu, Rational(0)), zk::ValidationError);
}

TEST(Embed, Examples) {
  EXPECT_EQ(zk::embed_phi(BundleSpec::make(2, 3, parse_laurent("z*u"))),
            BundleSpec::make(2, 5, parse_laurent("z^3*u^3")));
  EXPECT_EQ(zk::embed_phi(BundleSpec::split(1, 1)), BundleSpec::split(1, 2));
  EXPECT_EQ(zk::embed_phi(BundleSpec::make(2, 3, parse_laurent("u"))), BundleSpec::make(2, 5, parse_laurent("z^2*u^3")));
}

TEST(Embed, WindowMapsIntoWindow) {
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j <= 10; ++j) {
      for (const auto& m : zk::canonical_window(k, j)) {
        EXPECT_TRUE(zk::in_canonical_window(k, j + k, {m.s + k, m.r + 2})) << k << " " << j;
      }
    }
  }
}

TEST(Json, RoundTrip) {
  const auto b = BundleSpec::make(3, 6, parse_laurent("-1/2*z^-1*u + z^4*u^2"));
  EXPECT_EQ(zk::bundle_from_json(zk::to_json(b)), b);
  EXPECT_THROW(zk::bundle_from_json("{"), zk::ParseError);
  EXPECT_THROW(zk::bundle_from_json(R"({"k": 2, "j": 3})"), zk::ParseError);
  EXPECT_THROW(zk::bundle_from_json(R"({"k": 2, "j": 3, "p": [{"r": 0, "s": 0, "c": "1"}]})"), zk::ValidationError);
}
