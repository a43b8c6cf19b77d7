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

#include <vector>

#include "gtest/gtest.h"
#include "mvindep/rng.hpp"
#include "mvindep/stats/hhg.hpp"
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

TEST(Hhg, ThreePointsAlwaysZero) {
  // One remaining point per table forces a zero margin everywhere.
  for (std::uint64_t seed : {1, 2, 3}) {
    const Matrix x = random_matrix(3, 2, seed);
    const Matrix y = random_matrix(3, 1, seed + 10);
    EXPECT_DOUBLE_EQ(mvindep::hhg(x, y), 0.0);
  }
}

TEST(Hhg, HandBuiltFivePointsMatchesTripleLoop) {
  Matrix x(5, 1), y(5, 1);
  x << 0.0, 1.0, 2.0, 3.5, 5.0;
  y << 1.0, 0.5, 2.5, 2.0, 4.0;
  EXPECT_NEAR(mvindep::hhg(x, y), oracle::hhg(x, y), 1e-12);
  EXPECT_GT(mvindep::hhg(x, y), 0.0);
}

TEST(Hhg, MatchesTripleLoopOnRandomInputs) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 5 + static_cast<int>(seed % 9);
    const Matrix x = random_matrix(n, 1 + static_cast<int>(seed % 3), 100 + seed);
    const Matrix y = random_matrix(n, 1 + static_cast<int>((seed / 3) % 3), 200 + seed);
    EXPECT_NEAR(mvindep::hhg(x, y), oracle::hhg(x, y), 1e-10 * (1.0 + oracle::hhg(x, y)))
        << "seed " << seed;
  }
}

TEST(Hhg, TiedDistancesMatchTripleLoop) {
  // Duplicate rows create exact distance ties on both sides.
  Matrix x(8, 1), y(8, 1);
  x << 0, 0, 1, 1, 2, 2, 3, 3;
  y << 1, 1, 0, 2, 2, 0, 3, 3;
  EXPECT_NEAR(mvindep::hhg(x, y), oracle::hhg(x, y), 1e-12);

  mvindep::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(9, 1), b(9, 1);
    for (int i = 0; i < 9; ++i) {
      a(i, 0) = std::floor(rng.uniform(0.0, 4.0));
      b(i, 0) = std::floor(rng.uniform(0.0, 4.0));
    }
    if (a.maxCoeff() == a.minCoeff() || b.maxCoeff() == b.minCoeff()) continue;
    EXPECT_NEAR(mvindep::hhg(a, b), oracle::hhg(a, b), 1e-10) << "trial " << trial;
  }
}

TEST(Hhg, EmpiricallySymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Matrix x = random_matrix(10, 2, 300 + seed);
    const Matrix y = random_matrix(10, 1, 400 + seed);
    const double xy = mvindep::hhg(x, y);
    const double yx = mvindep::hhg(y, x);
    EXPECT_NEAR(xy, yx, 1e-10 * (1.0 + xy));
  }
}

TEST(Hhg, DependentDataScoresAboveShuffled) {
  // Strongly dependent linear data should out-score its own shuffled copy in
  // nearly every seeded trial.
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    mvindep::Rng rng(seed);
    Matrix x(20, 1), y(20, 1);
    for (int i = 0; i < 20; ++i) {
      x(i, 0) = rng.normal();
      y(i, 0) = 2.0 * x(i, 0) + 0.1 * rng.normal();
    }
    const std::vector<int> perm = rng.permutation(20);
    Matrix y_shuffled(20, 1);
    for (int i = 0; i < 20; ++i) y_shuffled(i, 0) = y(perm[i], 0);
    if (mvindep::hhg(x, y) > mvindep::hhg(x, y_shuffled)) ++wins;
  }
  EXPECT_GE(wins, 95);
}

}  // namespace
