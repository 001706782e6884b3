#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "zk/linalg.hpp"

using zk::DenseVector;
using zk::Rational;
using zk::SparseMatrix;

namespace {

SparseMatrix dense(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  std::vector<DenseVector> d;
  for (const auto& r : rows) {
    DenseVector v;
    for (long x : r) v.emplace_back(x);
    d.push_back(std::move(v));
  }
  return SparseMatrix::from_dense(d, cols);
}

// Small integer matrices with a bias towards zeros and repeated rows, so
// that rank deficiency is common.
struct MatrixGen {
  std::mt19937_64 rng;
  explicit MatrixGen(std::uint64_t seed) : rng(seed) {}

  SparseMatrix next() {
    const std::size_t rows = rng() % 7, cols = rng() % 7;
    SparseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r > 0 && rng() % 4 == 0) {
        const std::int64_t f = static_cast<std::int64_t>(rng() % 5) - 2;
        const std::size_t src = rng() % r;
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, m.get(src, c) * Rational(f));
        continue;
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) m.set(r, c, Rational(static_cast<std::int64_t>(rng() % 11) - 5, 1 + rng() % 3));
      }
    }
    return m;
  }
};

std::size_t oracle_rank(const SparseMatrix& m) {
  std::vector<std::vector<mpq_class>> d(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c).to_mpq();
  }
  return oracle::dense_rank(d);
}

}  // namespace

TEST(Rational, NormalisesSignAndLowestTerms) {
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(0, -7), Rational(0));
  EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, PromotesPastSixtyFourBits) {
  Rational big(std::numeric_limits<std::int64_t>::max());
  Rational sq = big * big;
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class("85070591730234615847396907784232501249")));
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ(sq - sq, Rational(0));
  EXPECT_TRUE((sq - sq).is_zero());
  EXPECT_LT(big, sq);
  EXPECT_EQ(-Rational(std::numeric_limits<std::int64_t>::min()) - Rational(1), big);
}

TEST(Rank, Examples) {
  EXPECT_EQ(zk::rank(SparseMatrix(0, 0)), 0U);
  EXPECT_EQ(zk::rank(dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)), 3U);
  EXPECT_EQ(zk::rank(dense({{1, 2}, {2, 4}}, 2)), 1U);
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(zk::nullspace_basis(dense({{1, 0}, {0, 1}}, 2)).empty());
  EXPECT_EQ(zk::nullspace_basis(SparseMatrix(1, 3)).size(), 3U);
  const auto ns = zk::nullspace_basis(dense({{1, 1}}, 2));
  ASSERT_EQ(ns.size(), 1U);
  EXPECT_EQ(ns[0][0], -ns[0][1]);
  EXPECT_FALSE(ns[0][0].is_zero());
}

TEST(QuotientDim, Examples) {
  EXPECT_EQ(zk::quotient_dim(3, {}), 3U);
  EXPECT_EQ(zk::quotient_dim(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 0U);
  EXPECT_EQ(zk::quotient_dim(2, {{1, 1}, {2, 2}}), 1U);
  EXPECT_THROW(zk::quotient_dim(2, {{1, 1, 1}}), std::invalid_argument);
}

TEST(RowReducer, ReduceAndContains) {
  zk::RowReducer rr(3);
  EXPECT_TRUE(rr.insert({{0, Rational(2)}, {2, Rational(4)}}));
  EXPECT_FALSE(rr.insert({{0, Rational(1)}, {2, Rational(2)}}));
  EXPECT_TRUE(rr.contains({{0, Rational(-3)}, {2, Rational(-6)}}));
  EXPECT_FALSE(rr.contains({{1, Rational(1)}}));
  EXPECT_EQ(rr.rank(), 1U);
  EXPECT_EQ(rr.kernel().size(), 2U);
}

TEST(LinalgProperty, RankMatchesDenseOracleAndTranspose) {
  MatrixGen gen(0x5eed);
  for (int i = 0; i < 300; ++i) {
    const SparseMatrix m = gen.next();
    const std::size_t r = zk::rank(m);
    ASSERT_EQ(r, oracle_rank(m)) << "case " << i;
    ASSERT_EQ(r, zk::rank(m.transpose())) << "case " << i;
  }
}

TEST(LinalgProperty, RankNullity) {
  MatrixGen gen(42);
  for (int i = 0; i < 300; ++i) {
    const SparseMatrix m = gen.next();
    const auto ns = zk::nullspace_basis(m);
    ASSERT_EQ(m.cols(), zk::rank(m) + ns.size()) << "case " << i;
    const auto rows = m.row_vectors();
    for (const auto& v : ns) {
      for (const auto& row : rows) {
        Rational dot;
        for (const auto& [c, x] : row) dot += x * v[c];
        ASSERT_TRUE(dot.is_zero());
      }
    }
  }
}
