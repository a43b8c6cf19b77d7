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

#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mvindep/inference.hpp"
#include "mvindep/rng.hpp"
#include "mvindep/simulations.hpp"
#include "mvindep/stats/registry.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

enum class PowerAxis { sample_size, dimension };

/// Estimated rejection rates along a grid of sample sizes (p fixed at 1) or
/// dimensions (n fixed at 100).
struct PowerCurve {
  std::string statistic_name;
  SimKind sim_kind = SimKind::linear;
  PowerAxis axis = PowerAxis::sample_size;
  std::vector<int> grid;
  std::vector<double> power;
  double alpha = 0.05;
  int replicates = 0;
  int n_permutations = 0;
  std::uint64_t seed = 0;
  double kappa = 1.0;

  /// Binomial standard error of the estimate at grid position i.
  double stderr_at(std::size_t i) const {
    const double p = power[i];
    return std::sqrt(p * (1.0 - p) / static_cast<double>(replicates));
  }
};

inline constexpr int kDimensionAxisSampleSize = 100;

/// Monte Carlo power estimate: at each grid point, `replicates` independent
/// simulate -> permutation-test trials are run and the fraction with
/// p <= alpha recorded. Trial t at grid index g derives its simulation and
/// permutation seeds as mix(mix(seed, g), 2t) and mix(mix(seed, g), 2t + 1),
/// so estimates do not depend on thread count or scheduling.
inline PowerCurve estimate_power(const Statistic& stat, SimKind sim_kind,
                                 PowerAxis axis, const std::vector<int>& grid,
                                 double alpha, int replicates,
                                 int n_permutations, std::uint64_t seed,
                                 double kappa = 1.0, int jobs = 0) {
  require(alpha > 0.0 && alpha < 1.0, ErrorKind::spec_error,
          "alpha must lie in (0, 1)");
  require(replicates >= 1, ErrorKind::spec_error, "replicates must be >= 1");
  require(!grid.empty(), ErrorKind::spec_error, "grid must be non-empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], ErrorKind::spec_error,
            "grid must be strictly increasing");

  PowerCurve curve;
  curve.statistic_name = stat.name;
  curve.sim_kind = sim_kind;
  curve.axis = axis;
  curve.grid = grid;
  curve.alpha = alpha;
  curve.replicates = replicates;
  curve.n_permutations = n_permutations;
  curve.seed = seed;
  curve.kappa = kappa;
  curve.power.reserve(grid.size());

  for (std::size_t g = 0; g < grid.size(); ++g) {
    SimSpec spec;
    spec.kind = sim_kind;
    spec.kappa = kappa;
    if (axis == PowerAxis::sample_size) {
      spec.n = grid[g];
      spec.p = 1;
    } else {
      spec.n = kDimensionAxisSampleSize;
      spec.p = grid[g];
    }
    const std::uint64_t grid_seed = mix_seed(seed, g);
    std::atomic<int> rejections{0};
    detail::parallel_for(replicates, jobs, [&](int t) {
      SimSpec trial = spec;
      trial.seed = mix_seed(grid_seed, 2 * static_cast<std::uint64_t>(t));
      const SimulatedPair pair = simulate(trial);
      const TestResult r = permutation_test(
          stat, pair.x, pair.y, n_permutations,
          mix_seed(grid_seed, 2 * static_cast<std::uint64_t>(t) + 1),
          /*jobs=*/1);
      if (r.p_value <= alpha)
        rejections.fetch_add(1, std::memory_order_relaxed);
    });
    curve.power.push_back(static_cast<double>(rejections.load()) /
                          static_cast<double>(replicates));
  }
  return curve;
}

struct BenchRow {
  std::string statistic_name;
  int n = 0;
  double mean_seconds = 0.0;
};

/// Mean wall time of statistic-only evaluation on noisy linear data, per
/// grid sample size. One untimed warmup evaluation precedes the measured
/// repetitions.
inline std::vector<BenchRow> wall_time_bench(const Statistic& stat,
                                             const std::vector<int>& grid,
                                             int repetitions,
                                             std::uint64_t seed = 0) {
  require(!grid.empty(), ErrorKind::spec_error, "grid must be non-empty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], ErrorKind::spec_error,
            "grid must be strictly increasing");
  require(repetitions >= 1, ErrorKind::spec_error, "repetitions must be >= 1");

  std::vector<BenchRow> rows;
  rows.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    SimSpec spec;
    spec.kind = SimKind::linear;
    spec.n = grid[g];
    spec.p = 1;
    spec.kappa = 1.0;
    spec.seed = mix_seed(seed, g);
    const SimulatedPair pair = simulate(spec);
    volatile double sink = stat(pair.x, pair.y).value;  // warmup
    double total = 0.0;
    for (int r = 0; r < repetitions; ++r) {
      const auto start = std::chrono::steady_clock::now();
      sink = stat(pair.x, pair.y).value;
      const auto stop = std::chrono::steady_clock::now();
      total += std::chrono::duration<double>(stop - start).count();
    }
    (void)sink;
    rows.push_back({stat.name, grid[g], total / repetitions});
  }
  return rows;
}

}  // namespace mvindep
