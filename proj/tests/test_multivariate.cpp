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
#include "mvindep/rng.hpp"
#include "mvindep/stats/multivariate.hpp"
#include "mvindep/stats/univariate.hpp"
#include "oracles.hpp"

namespace {

using mvindep::Matrix;

Matrix random_matrix(int n, int p, std::uint64_t seed) {
  mvindep::Rng rng(seed);
  Matrix m(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = rng.normal();
  return m;
}

TEST(Rv, UnivariateReducesToSquaredPearson) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matrix x = random_matrix(12, 1, seed);
    const Matrix y = random_matrix(12, 1, seed + 1000);
    const double r = mvindep::pearson(x, y);
    EXPECT_NEAR(mvindep::rv(x, y), r * r, 1e-12);
  }
}

TEST(Rv, SelfCongruenceIsOne) {
  const Matrix x = random_matrix(10, 3, 4);
  EXPECT_NEAR(mvindep::rv(x, x), 1.0, 1e-12);
}

TEST(Rv, MatchesTraceOracle) {
  const Matrix x = random_matrix(10, 2, 21);
  const Matrix y = random_matrix(10, 3, 22);
  EXPECT_NEAR(mvindep::rv(x, y), oracle::rv(x, y), 1e-12);
}

TEST(Rv, ConstantDataIsZeroVariance) {
  const Matrix x = Matrix::Ones(6, 2);
  const Matrix y = random_matrix(6, 2, 1);
  try {
    mvindep::rv(x, y);
    FAIL() << "expected ZeroVariance";
  } catch (const mvindep::Error& e) {
    EXPECT_EQ(e.kind(), mvindep::ErrorKind::zero_variance);
  }
}

TEST(Cca, UnivariateReducesToAbsolutePearson) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matrix x = random_matrix(15, 1, seed);
    const Matrix y = random_matrix(15, 1, seed + 500);
    EXPECT_NEAR(mvindep::cca(x, y), std::abs(mvindep::pearson(x, y)), 1e-10);
  }
}

TEST(Cca, InvertibleLinearMapGivesOne) {
  const Matrix x = random_matrix(20, 2, 9);
  Matrix a(2, 2);
  a << 2.0, -1.0, 0.5, 3.0;
  const Matrix y = x * a;
  EXPECT_NEAR(mvindep::cca(x, y), 1.0, 1e-8);
}

TEST(Cca, MatchesPowerIterationOracle) {
  for (std::uint64_t seed : {3, 14, 15, 92, 65}) {
    const Matrix x = random_matrix(20, 2, seed);
    const Matrix y = random_matrix(20, 2, seed + 77);
    EXPECT_NEAR(mvindep::cca(x, y), oracle::cca_power_iteration(x, y), 1e-6);
  }
}

TEST(Cca, ConstantDataIsNumericalError) {
  const Matrix x = Matrix::Zero(8, 2);
  const Matrix y = random_matrix(8, 2, 2);
  try {
    mvindep::cca(x, y);
    FAIL() << "expected NumericalError";
  } catch (const mvindep::Error& e) {
    EXPECT_EQ(e.kind(), mvindep::ErrorKind::numerical_error);
  }
}

}  // namespace
