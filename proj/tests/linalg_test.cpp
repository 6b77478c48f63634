#include <gtest/gtest.h>

#include <random>

#include "blockrank/error.hpp"
#include "blockrank/linalg.hpp"
#include "support/oracle.hpp"

using namespace blockrank;

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t rank_cap) {
  static const std::vector<Rational> values = {0, 0, 1, -1, 2, Rational(1, 2), Rational(-3, 7)};
  auto entry = [&] { return values[rng() % values.size()]; };
  RationalMatrix p(rows, rank_cap), q(rank_cap, cols), m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < rank_cap; ++k) p(i, k) = entry();
  }
  for (std::size_t k = 0; k < rank_cap; ++k) {
    for (std::size_t j = 0; j < cols; ++j) q(k, j) = entry();
  }
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < rank_cap; ++k) m(i, j) += p(i, k) * q(k, j);
    }
  }
  return m;
}

RationalMatrix simple_adjacency(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RationalMatrix m(n, n);
  for (auto [u, v] : edges) m(u, v) = m(v, u) = 1;
  return m;
}

}  // namespace

TEST(Rank, ZeroMatrices) {
  EXPECT_EQ(rank_of(RationalMatrix(0, 0)), 0U);
  EXPECT_EQ(rank_of(RationalMatrix(3, 0)), 0U);
  EXPECT_EQ(rank_of(RationalMatrix(4, 7)), 0U);
  EXPECT_TRUE(rank(RationalMatrix(2, 2)).pivot_columns.empty());
}

TEST(Rank, CompleteBipartiteIsTwo) {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      std::vector<std::pair<std::size_t, std::size_t>> e;
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
      }
      EXPECT_EQ(rank_of(simple_adjacency(a + b, e)), 2U) << a << "," << b;
    }
  }
}

TEST(Rank, CompleteGraphIsNonsingular) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    EXPECT_EQ(rank_of(simple_adjacency(n, e)), n);
  }
}

TEST(Rank, PivotColumnsAreIndependent) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const RationalMatrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, rng() % 5);
    const RankResult r = rank(m);
    ASSERT_EQ(r.rank, r.pivot_columns.size());
    EXPECT_TRUE(std::is_sorted(r.pivot_columns.begin(), r.pivot_columns.end()));
    std::vector<std::size_t> rows(m.rows());
    std::iota(rows.begin(), rows.end(), 0);
    EXPECT_EQ(oracle::rank(m.submatrix(rows, r.pivot_columns)), r.rank);
  }
}

TEST(Rank, MatchesGaussJordanAndTranspose) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = rng() % 9, cols = rng() % 9;
    const RationalMatrix m = random_matrix(rng, rows, cols, rng() % 9);
    const std::size_t r = rank_of(m);
    EXPECT_EQ(r, oracle::rank(m));
    EXPECT_EQ(r, rank_of(m.transpose()));
    EXPECT_LE(r, std::min(rows, cols));
  }
}

TEST(Rank, HugeEntriesTakeTheBigPath) {
  // 2^62-scale entries overflow the word-sized elimination.
  const Rational big = Rational(INT64_MAX / 3);
  RationalMatrix m{{big, big + 1, 1}, {big + 2, big, 3}, {big * 2 + 2, big * 2 + 1, 4}};
  EXPECT_EQ(rank_of(m), oracle::rank(m));
  EXPECT_EQ(rank_of(m), 2U);
  const Rational huge = Rational(INT64_MAX) * Rational(INT64_MAX);
  RationalMatrix h{{huge, 1}, {1, Rational(1, 3)}};
  EXPECT_EQ(rank_of(h), 2U);
}

TEST(Rank, IntegerOverload) {
  const std::vector<std::int64_t> e{1, 2, 3, 2, 4, 6, 0, 1, 1};
  EXPECT_EQ(rank_of(3, 3, e), 2U);
  EXPECT_THROW(rank_of(2, 2, e), Error);
}

TEST(Membership, Examples) {
  const RationalMatrix m{{1, 2}, {2, 4}};
  const RationalVector zero{0, 0};
  const Membership z = in_row_space(zero, m);
  ASSERT_TRUE(z);
  for (const Rational& c : z.coefficients) EXPECT_TRUE(c.is_zero());
  EXPECT_TRUE(in_row_space(m.row(1), m));
  EXPECT_TRUE(in_column_space(zero, m));
  EXPECT_TRUE(in_column_space(m.column(1), m));

  EXPECT_FALSE(in_row_space(RationalVector{1, 0}, RationalMatrix{{0, 1}}));
  EXPECT_FALSE(in_column_space(RationalVector{1, 0}, RationalMatrix{{0}, {1}}));
  EXPECT_THROW(in_row_space(RationalVector{1}, m), Error);
  EXPECT_THROW(in_column_space(RationalVector{1, 2, 3}, m), Error);
}

TEST(Membership, EmptyMatrices) {
  EXPECT_TRUE(in_row_space(RationalVector{}, RationalMatrix(0, 0)));
  EXPECT_TRUE(in_row_space(RationalVector{}, RationalMatrix(3, 0)));
  EXPECT_FALSE(in_row_space(RationalVector{1, 0}, RationalMatrix(0, 2)));
  EXPECT_TRUE(in_row_space(RationalVector{0, 0}, RationalMatrix(0, 2)));
}

TEST(Membership, AgreesWithStackedRankAndWitnesses) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = rng() % 6, cols = 1 + rng() % 6;
    const RationalMatrix m = random_matrix(rng, rows, cols, rng() % 5);
    RationalVector v(cols);
    if (rows > 0 && rng() % 2) {
      for (std::size_t i = 0; i < rows; ++i) {
        const Rational c(static_cast<std::int64_t>(rng() % 5) - 2);
        for (std::size_t j = 0; j < cols; ++j) v[j] += c * m(i, j);
      }
    } else {
      for (auto& x : v) x = Rational(static_cast<std::int64_t>(rng() % 3) - 1);
    }
    const Membership got = in_row_space(v, m);
    const bool expected = oracle::rank(m.with_row(v)) == oracle::rank(m);
    ASSERT_EQ(got.member, expected);
    if (got) {
      ASSERT_EQ(got.coefficients.size(), rows);
      for (std::size_t j = 0; j < cols; ++j) {
        Rational s;
        for (std::size_t i = 0; i < rows; ++i) s += got.coefficients[i] * m(i, j);
        EXPECT_EQ(s, v[j]);
      }
    }
    // Column version through the transpose.
    EXPECT_EQ(in_column_space(v, m.transpose()).member, expected);

    // A reused factorization answers the same.
    const RowSpace rs(m);
    EXPECT_EQ(rs.contains(v), expected);
    EXPECT_EQ(rs.rank(), oracle::rank(m));
  }
}

TEST(Membership, FractionalVectorsAgree) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    const RationalMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 1 + rng() % 4);
    RationalVector v(m.cols());
    const Rational c(1 + static_cast<std::int64_t>(rng() % 5), 3 + static_cast<std::int64_t>(rng() % 4));
    for (std::size_t j = 0; j < m.cols(); ++j) v[j] = c * m(0, j);
    if (rng() % 2) v[rng() % v.size()] += Rational(1, 7);
    EXPECT_EQ(RowSpace(m).contains(v), oracle::rank(m.with_row(v)) == oracle::rank(m));
  }
}

TEST(Bordered, Examples) {
  const RationalMatrix z = bordered(0, RationalVector{}, RationalVector{}, RationalMatrix(0, 0));
  EXPECT_EQ(z, RationalMatrix({{0}}));
  EXPECT_EQ(rank_of(z), 0U);

  const RationalMatrix m = bordered(0, RationalVector{1}, RationalVector{1}, RationalMatrix{{0}});
  EXPECT_EQ(m, RationalMatrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(oracle::rank(m), 2U);
  EXPECT_EQ(oracle::rank(bordered(5, RationalVector{1}, RationalVector{1}, RationalMatrix{{0}})), 2U);

  EXPECT_THROW(bordered(0, RationalVector{1, 2}, RationalVector{1}, RationalMatrix{{0}}), Error);
}

TEST(Bordered, RankGrowsByAtMostTwo) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = rng() % 6;
    const RationalMatrix b = random_matrix(rng, k, k, rng() % (k + 1));
    RationalVector x(k), y(k);
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = Rational(static_cast<std::int64_t>(rng() % 3) - 1);
      y[i] = Rational(static_cast<std::int64_t>(rng() % 3) - 1);
    }
    const std::size_t rb = rank_of(b);
    const std::size_t r_row = rank_of(b.with_row(x));
    const std::size_t r_all = rank_of(bordered(Rational(static_cast<std::int64_t>(rng() % 3)), x, y, b));
    EXPECT_LE(r_row, rb + 1);
    EXPECT_GE(r_row, rb);
    EXPECT_LE(r_all, rb + 2);
    EXPECT_GE(r_all, rb);
  }
}
