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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mvindep/rng.hpp"
#include "mvindep/stats/registry.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

struct TestResult {
  std::string statistic_name;
  double statistic = 0.0;
  double p_value = 1.0;
  int n_permutations = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<int, int>> scale;
};

namespace detail {

inline Matrix permute_rows(const Matrix& m, const std::vector<int>& perm) {
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    out.row(i) = m.row(perm[static_cast<std::size_t>(i)]);
  return out;
}

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(first..last-1) across `jobs` threads in strided fashion. Each index
// is an independent work item, so scheduling cannot change any result.
template <typename Fn>
inline void parallel_for(int count, int jobs, Fn&& fn) {
  jobs = std::min(resolve_jobs(jobs), std::max(count, 1));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (int i = t; i < count; i += jobs) fn(i);
    });
  }
  for (std::thread& w : workers) w.join();
}

}  // namespace detail

/// Permutation test of independence: the observed statistic against the null
/// distribution obtained by re-evaluating it under random row permutations of
/// y. The p-value uses the add-one rule
///   p = (1 + #{r : t_r >= t_0}) / (1 + n_permutations),
/// so it is never zero and is exact-level under exchangeability. Statistics
/// whose sign carries direction are compared by absolute value.
///
/// Replicate r draws its permutation from a generator seeded with seed ^ r,
/// so the result is one exceedance count per replicate and identical whether
/// replicates run sequentially or across threads.
inline TestResult permutation_test(const Statistic& stat, const Matrix& x,
                                   const Matrix& y, int n_permutations,
                                   std::uint64_t seed, int jobs = 0) {
  require(n_permutations >= 1, ErrorKind::spec_error,
          "n_permutations must be at least 1");
  require_same_rows(x, y);
  const int n = static_cast<int>(x.rows());

  const StatResult observed = stat(x, y);
  const double threshold =
      stat.signed_value ? std::abs(observed.value) : observed.value;

  std::atomic<long long> exceed{0};
  detail::parallel_for(n_permutations, jobs, [&](int r) {
    Rng rng(seed ^ static_cast<std::uint64_t>(r + 1));
    const std::vector<int> perm = rng.permutation(n);
    const double t = stat(x, detail::permute_rows(y, perm)).value;
    const double c = stat.signed_value ? std::abs(t) : t;
    if (c >= threshold) exceed.fetch_add(1, std::memory_order_relaxed);
  });

  TestResult result;
  result.statistic_name = stat.name;
  result.statistic = observed.value;
  result.p_value = (1.0 + static_cast<double>(exceed.load())) /
                   (1.0 + static_cast<double>(n_permutations));
  result.n_permutations = n_permutations;
  result.seed = seed;
  result.scale = observed.scale;
  return result;
}

inline TestResult permutation_test(std::string_view statistic_name,
                                   const Matrix& x, const Matrix& y,
                                   int n_permutations, std::uint64_t seed,
                                   int jobs = 0) {
  return permutation_test(find_statistic(statistic_name), x, y, n_permutations,
                          seed, jobs);
}

/// Exact permutation test: enumerates all n! row permutations of y (identity
/// included) and reports p = #{pi : t_pi >= t_0} / n!. Limited to n <= 7.
inline TestResult exact_permutation_test(const Statistic& stat, const Matrix& x,
                                         const Matrix& y) {
  require_same_rows(x, y);
  const int n = static_cast<int>(x.rows());
  require(n <= 7, ErrorKind::size_error,
          "exact test enumerates n! permutations; limited to n <= 7");

  const StatResult observed = stat(x, y);
  const double threshold =
      stat.signed_value ? std::abs(observed.value) : observed.value;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  long long exceed = 0;
  do {
    const double t = stat(x, detail::permute_rows(y, perm)).value;
    const double c = stat.signed_value ? std::abs(t) : t;
    if (c >= threshold) ++exceed;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));

  TestResult result;
  result.statistic_name = stat.name;
  result.statistic = observed.value;
  result.p_value = static_cast<double>(exceed) / static_cast<double>(total);
  result.n_permutations = static_cast<int>(total);
  result.seed = 0;
  result.scale = observed.scale;
  return result;
}

/// Reduces a k-sample problem to an independence problem: x stacks the
/// samples, y is the N x k one-hot matrix of group labels. One-hot (rather
/// than integer) labels keep the groups equidistant, so distance statistics
/// see no spurious ordering. Testing (x, y) for independence with any
/// statistic tests equality of the k distributions.
inline std::pair<Matrix, Matrix> ksample_transform(
    const std::vector<Matrix>& samples) {
  require(samples.size() >= 2, ErrorKind::spec_error,
          "k-sample transform needs at least two samples");
  const Index p = samples.front().cols();
  Index total = 0;
  for (const Matrix& s : samples) {
    require(s.rows() >= 1, ErrorKind::size_error, "empty sample");
    require(s.cols() == p, ErrorKind::dimension_error,
            "all samples must share the same column count");
    require(s.allFinite(), ErrorKind::invalid_data,
            "sample contains NaN or infinite entries");
    total += s.rows();
  }
  const auto k = static_cast<Index>(samples.size());
  Matrix x(total, p);
  Matrix labels = Matrix::Zero(total, k);
  Index row = 0;
  for (Index g = 0; g < k; ++g) {
    const Matrix& s = samples[static_cast<std::size_t>(g)];
    x.middleRows(row, s.rows()) = s;
    labels.block(row, g, s.rows(), 1).setOnes();
    row += s.rows();
  }
  return {std::move(x), std::move(labels)};
}

}  // namespace mvindep
