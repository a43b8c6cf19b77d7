// Copyright 2026 The mvindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "gtest/gtest.h"
#include "mvindep/pairwise.hpp"
#include "mvindep/rng.hpp"
#include "oracles.hpp"

namespace {

using mvindep::Centering;
using mvindep::Matrix;
using mvindep::PairwiseKind;
using mvindep::PairwiseMatrix;

Matrix random_matrix(int n, int p, std::uint64_t seed) {
  mvindep::Rng rng(seed);
  Matrix m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = rng.normal();
  return m;
}

TEST(EuclideanDistances, OneDimensionalAbsoluteDifferences) {
  Matrix x(3, 1);
  x << 0, 3, 4;
  const Matrix d = mvindep::euclidean_distances(x).values;
  Matrix expected(3, 3);
  expected << 0, 3, 4, 3, 0, 1, 4, 1, 0;
  EXPECT_LT((d - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(EuclideanDistances, PythagoreanTriple) {
  Matrix x(2, 2);
  x << 0, 0, 3, 4;
  const Matrix d = mvindep::euclidean_distances(x).values;
  EXPECT_DOUBLE_EQ(d(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(d(1, 0), 5.0);
  EXPECT_DOUBLE_EQ(d(0, 0), 0.0);
}

TEST(EuclideanDistances, MatchesNaiveLoop) {
  const Matrix x = random_matrix(6, 3, 17);
  const Matrix d = mvindep::euclidean_distances(x).values;
  const Matrix expected = oracle::pairwise_distances(x);
  EXPECT_LT((d - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(EuclideanDistances, RejectsNonFiniteInput) {
  Matrix x(2, 1);
  x << 1.0, std::nan("");
  try {
    mvindep::euclidean_distances(x);
    FAIL() << "expected InvalidData";
  } catch (const mvindep::Error& e) {
    EXPECT_EQ(e.kind(), mvindep::ErrorKind::invalid_data);
  }
}

TEST(EuclideanDistances, TriangleInequalityOnSampledTriples) {
  for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
    const Matrix x = random_matrix(12, 2, seed);
    const Matrix d = mvindep::euclidean_distances(x).values;
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        for (int k = 0; k < 12; ++k)
          EXPECT_LE(d(i, j), d(i, k) + d(k, j) + 1e-9);
  }
}

TEST(GaussianKernel, TwoPointsGiveExpHalf) {
  for (double c : {0.5, 1.0, 7.25}) {
    Matrix x(2, 1);
    x << 0.0, c;
    const Matrix k = mvindep::gaussian_kernel(x).values;
    EXPECT_NEAR(k(0, 1), std::exp(-0.5), 1e-15);
    EXPECT_DOUBLE_EQ(k(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(k(1, 1), 1.0);
  }
}

TEST(GaussianKernel, SymmetricUnitDiagonalBoundedEntries) {
  const Matrix x = random_matrix(8, 2, 99);
  const Matrix k = mvindep::gaussian_kernel(x).values;
  EXPECT_LT((k - k.transpose()).cwiseAbs().maxCoeff(), 1e-15);
  for (int i = 0; i < 8; ++i) {
    EXPECT_DOUBLE_EQ(k(i, i), 1.0);
    for (int j = 0; j < 8; ++j) {
      EXPECT_GT(k(i, j), 0.0);
      EXPECT_LE(k(i, j), 1.0);
    }
  }
}

TEST(GaussianKernel, DegenerateOnlyWhenAllRowsIdentical) {
  Matrix x = Matrix::Ones(5, 2);
  x(4, 0) = 2.0;  // one distinct row keeps the bandwidth positive
  EXPECT_NO_THROW(mvindep::gaussian_kernel(x));

  const Matrix constant = Matrix::Ones(5, 2);
  try {
    mvindep::gaussian_kernel(constant);
    FAIL() << "expected DegenerateBandwidth";
  } catch (const mvindep::Error& e) {
    EXPECT_EQ(e.kind(), mvindep::ErrorKind::degenerate_bandwidth);
  }
}

TEST(GaussianKernel, TranslationInvariantAndPermutationEquivariant) {
  const Matrix x = random_matrix(9, 3, 5);
  const Matrix k = mvindep::gaussian_kernel(x).values;

  Matrix shifted = x;
  shifted.rowwise() += Eigen::RowVector3d(4.0, -2.5, 0.75);
  const Matrix k_shifted = mvindep::gaussian_kernel(shifted).values;
  EXPECT_LT((k - k_shifted).cwiseAbs().maxCoeff(), 1e-12);

  mvindep::Rng rng(123);
  const std::vector<int> perm = rng.permutation(9);
  Matrix permuted(9, 3);
  for (int i = 0; i < 9; ++i) permuted.row(i) = x.row(perm[i]);
  const Matrix k_perm = mvindep::gaussian_kernel(permuted).values;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      EXPECT_NEAR(k_perm(i, j), k(perm[i], perm[j]), 1e-14);
}

TEST(Center, DoubleHKillsRowAndColumnSums) {
  const Matrix x = random_matrix(7, 2, 3);
  const PairwiseMatrix d = mvindep::euclidean_distances(x);
  const Matrix c = mvindep::center(d, Centering::double_h).values;
  EXPECT_LT(c.rowwise().sum().cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_LT(c.colwise().sum().cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Center, DoubleHIsIdempotent) {
  const Matrix x = random_matrix(6, 2, 11);
  const PairwiseMatrix d = mvindep::euclidean_distances(x);
  const Matrix once = mvindep::center(d, Centering::double_h).values;
  const Matrix twice =
      mvindep::center({once, PairwiseKind::distance}, Centering::double_h).values;
  EXPECT_LT((once - twice).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Center, GlobalMeanSumsToZero) {
  const Matrix x = random_matrix(8, 3, 21);
  const PairwiseMatrix d = mvindep::euclidean_distances(x);
  const Matrix c = mvindep::center(d, Centering::global_mean).values;
  EXPECT_NEAR(c.sum(), 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(c.diagonal().cwiseAbs().maxCoeff(), 0.0);
}

TEST(Center, UnbiasedOnConstantOffDiagonalIsZero) {
  Matrix d = Matrix::Ones(4, 4);
  d.diagonal().setZero();
  const Matrix c =
      mvindep::center({d, PairwiseKind::distance}, Centering::unbiased).values;
  EXPECT_LT(c.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Center, UnbiasedHasZeroDiagonalAndNeedsFourPoints) {
  const Matrix x = random_matrix(5, 1, 2);
  const PairwiseMatrix d = mvindep::euclidean_distances(x);
  const Matrix c = mvindep::center(d, Centering::unbiased).values;
  EXPECT_DOUBLE_EQ(c.diagonal().cwiseAbs().maxCoeff(), 0.0);

  const Matrix small = random_matrix(3, 1, 2);
  try {
    mvindep::center(mvindep::euclidean_distances(small), Centering::unbiased);
    FAIL() << "expected SizeError";
  } catch (const mvindep::Error& e) {
    EXPECT_EQ(e.kind(), mvindep::ErrorKind::size_error);
  }
}

TEST(Center, ColumnMeanColumnsSumToZero) {
  const Matrix x = random_matrix(9, 2, 31);
  const PairwiseMatrix d = mvindep::euclidean_distances(x);
  const Matrix c = mvindep::center(d, Centering::column_mean).values;
  EXPECT_LT(c.colwise().sum().cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_DOUBLE_EQ(c.diagonal().cwiseAbs().maxCoeff(), 0.0);
}

}  // namespace
