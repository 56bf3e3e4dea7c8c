#include "sqc/errors.hpp"
#include "sqc/linalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <limits>

using namespace sqc;

TEST(SymMatrix, RejectsNonSquareAndNonFinite) {
  EXPECT_THROW(SymMatrix(Matrix(2, 3)), InputError);
  EXPECT_THROW(SymMatrix(Matrix(0, 0)), InputError);
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(SymMatrix{m}, InputError);
}

TEST(SymMatrix, SymmetrizesWithinTolerance) {
  Matrix m(2, 2);
  m << 1, 2 + 1e-12, 2, 3;
  SymMatrix a(m);
  EXPECT_EQ(a(0, 1), a(1, 0));
  m(0, 1) = 2.1;
  EXPECT_THROW(SymMatrix{m}, InputError);
}

TEST(SymMatrix, AsymmetryIsRelativeToMagnitude) {
  Matrix m(2, 2);
  m << 1e6, 5e6, 5e6 + 1e-4, 1e6; // 1e-4 < 1e-9 * 5e6
  EXPECT_NO_THROW(SymMatrix{m});
}

TEST(SymMatrix, FromRowsRagged) {
  EXPECT_THROW(SymMatrix::from_rows({{1, 2}, {3}}), InputError);
  const auto a = SymMatrix::from_rows({{1, -1}, {-1, 2}});
  EXPECT_EQ(a.dim(), 2);
  EXPECT_DOUBLE_EQ(a(1, 0), -1.0);
}

TEST(SymMatrix, DerivedMatrices) {
  const auto a = SymMatrix::from_rows({{1, 2, 0}, {2, 3, 4}, {0, 4, 5}});
  EXPECT_DOUBLE_EQ(a.shifted(2.0)(1, 1), 5.0);
  EXPECT_DOUBLE_EQ(a.scaled(-2.0)(1, 2), -8.0);
  const int idx[] = {0, 2};
  const auto p = a.principal(idx);
  ASSERT_EQ(p.dim(), 2);
  EXPECT_DOUBLE_EQ(p(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(p(1, 1), 5.0);
  Vector x(3);
  x << 1, -1, 2;
  EXPECT_DOUBLE_EQ(a.quadratic_form(x), x.dot(a.matrix() * x));
}

TEST(Eigen, MatchesOracleOnRandomMatrices) {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const Matrix m = oracle::random_sym(n, 100 * n + s);
      const auto e = eigen_decompose(SymMatrix(m));
      const Vector ref = oracle::eigenvalues(m);
      EXPECT_LE((e.values - ref).cwiseAbs().maxCoeff(), 1e-10) << "n=" << n;
      EXPECT_LE((e.vectors.transpose() * e.vectors - Matrix::Identity(n, n)).norm(), 1e-10);
      EXPECT_LE((e.vectors * e.values.asDiagonal() * e.vectors.transpose() - m).norm(),
                1e-10 * std::max(1.0, m.norm()));
    }
  }
}

TEST(Eigen, AscendingAndSignNormalized) {
  const Matrix m = oracle::random_sym(7, 3);
  const auto e = eigen_decompose(SymMatrix(m));
  for (int i = 1; i < 7; ++i)
    EXPECT_LE(e.values(i - 1), e.values(i));
  for (int k = 0; k < 7; ++k) {
    Eigen::Index arg;
    e.vectors.col(k).cwiseAbs().maxCoeff(&arg);
    EXPECT_GE(e.vectors(arg, k), 0.0);
  }
}

TEST(Eigen, DiagonalAndRepeated) {
  const double d[] = {3.0, -1.0, 3.0, 2.0};
  const auto e = eigen_decompose(SymMatrix::diagonal(d));
  EXPECT_DOUBLE_EQ(e.values(0), -1.0);
  EXPECT_DOUBLE_EQ(e.values(3), 3.0);
  EXPECT_EQ(e.sweeps, 0);

  const auto s = cluster_eigenvalues(e, 1e-8);
  ASSERT_EQ(s.distinct_count(), 3);
  EXPECT_TRUE(s.smallest_simple());
  EXPECT_EQ(s.clusters[2].multiplicity, 2);
  EXPECT_EQ(s.clusters[2].first, 2);
}

TEST(Eigen, ClusterToleranceMergesNearTies) {
  Matrix m = Matrix::Identity(3, 3);
  m(2, 2) = 1.0 + 1e-10;
  const auto s = cluster_eigenvalues(eigen_decompose(SymMatrix(m)), 1e-8);
  EXPECT_EQ(s.distinct_count(), 1);
  EXPECT_EQ(s.clusters[0].multiplicity, 3);
}

TEST(Eigen, Householder3x3) {
  const Matrix v = Vector::Ones(3);
  const Matrix h = Matrix::Identity(3, 3) - 2.0 / 3.0 * v * v.transpose();
  const auto e = eigen_decompose(SymMatrix(h));
  EXPECT_NEAR(e.values(0), -1.0, 1e-12);
  EXPECT_NEAR(e.values(1), 1.0, 1e-12);
  EXPECT_NEAR(e.values(2), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(e.vectors.col(0).sum()), std::sqrt(3.0), 1e-12);
}

TEST(Permutation, Similarity) {
  const auto a = SymMatrix::from_rows({{1, 2, 3}, {2, 4, 5}, {3, 5, 6}});
  const int perm[] = {2, 0, 1};
  const auto b = permute_similarity(a, perm);
  EXPECT_DOUBLE_EQ(b(0, 0), 6.0);
  EXPECT_DOUBLE_EQ(b(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(b(1, 2), 2.0);
  const int bad[] = {0, 0, 1};
  EXPECT_THROW(permute_similarity(a, bad), InputError);
}

TEST(Diagonal, Detects) {
  const double d[] = {1.0, 2.0};
  EXPECT_TRUE(is_diagonal(SymMatrix::diagonal(d), 0.0));
  EXPECT_FALSE(is_diagonal(SymMatrix::from_rows({{1, 1e-6}, {1e-6, 1}}), 1e-9));
}
