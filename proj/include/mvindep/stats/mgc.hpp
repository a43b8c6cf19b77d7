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
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "mvindep/pairwise.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

/// Multiscale correlation output: the smoothed optimum, the 1-based
/// neighborhood scale (k, l) where it is attained, and the full n x n map of
/// local correlations c^{kl} (entry (k-1, l-1)).
struct MgcResult {
  double value = 0.0;
  int scale_k = 0;
  int scale_l = 0;
  Matrix local_map;
};

namespace detail {

// rank(i, j) = 1-based position of entry j when row i is ordered by
// (distance, column index). Each row is a permutation of 1..n; the self entry
// ranks first unless an earlier column ties it at distance zero.
inline std::vector<int> row_distance_ranks(const Matrix& d) {
  const int n = static_cast<int>(d.rows());
  std::vector<int> ranks(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double da = d(i, a);
      const double db = d(i, b);
      return da < db || (da == db && a < b);
    });
    for (int pos = 0; pos < n; ++pos)
      ranks[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] =
          pos + 1;
  }
  return ranks;
}

// Largest 4-connected region of cells where map(k,l) > threshold. Returns the
// cell list of the winner; ties go to the region discovered first in
// row-major order.
inline std::vector<int> largest_connected_region(const std::vector<double>& map,
                                                 int n, double threshold) {
  const int cells = n * n;
  std::vector<signed char> on(static_cast<std::size_t>(cells));
  for (int c = 0; c < cells; ++c)
    on[static_cast<std::size_t>(c)] = map[static_cast<std::size_t>(c)] > threshold;
  std::vector<int> best;
  std::vector<signed char> seen(static_cast<std::size_t>(cells), 0);
  std::vector<int> stack, current;
  for (int start = 0; start < cells; ++start) {
    if (!on[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
      continue;
    current.clear();
    stack.assign(1, start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      current.push_back(c);
      const int k = c / n;
      const int l = c % n;
      const int neighbors[4] = {k > 0 ? c - n : -1, k + 1 < n ? c + n : -1,
                                l > 0 ? c - 1 : -1, l + 1 < n ? c + 1 : -1};
      for (int nb : neighbors) {
        if (nb >= 0 && on[static_cast<std::size_t>(nb)] &&
            !seen[static_cast<std::size_t>(nb)]) {
          seen[static_cast<std::size_t>(nb)] = 1;
          stack.push_back(nb);
        }
      }
    }
    if (current.size() > best.size()) best = current;
  }
  return best;
}

}  // namespace detail

/// Multiscale graph correlation.
///
/// Local correlations: with column-mean-centered distance matrices Cx, Cy and
/// the k-nearest / l-nearest row-wise neighbor masks Gk, Hl (smallest k
/// entries of each row including the zero self distance, ties by column
/// index),
///   c^{kl} = sum(Cx o Gk o Cy o Hl) / sqrt(sum(Cx^2 o Gk) sum(Cy^2 o Hl)),
/// taken as 0 whenever a self term vanishes. The masks are nested in k and l,
/// so the whole map falls out of one pass: bin each (i,j) product by its
/// (x-rank, y-rank) cell and prefix-sum.
///
/// Smoothing: threshold the map at tau = max(2/n, magnitude of the most
/// negative c^{kl}), take the largest 4-connected region of cells above tau,
/// and report the region's maximum if the region spans more than 2n cells;
/// otherwise fall back to the global-scale value c^{nn}.
inline MgcResult mgc(const Matrix& x, const Matrix& y) {
  validate_data(x, 4);
  validate_data(y, 4);
  require_same_rows(x, y);
  const int n = static_cast<int>(x.rows());
  const std::size_t un = static_cast<std::size_t>(n);

  const Matrix dx = euclidean_distances(x).values;
  const Matrix dy = euclidean_distances(y).values;
  const Matrix cx = center({dx, PairwiseKind::distance}, Centering::column_mean).values;
  const Matrix cy = center({dy, PairwiseKind::distance}, Centering::column_mean).values;
  const std::vector<int> rank_x = detail::row_distance_ranks(dx);
  const std::vector<int> rank_y = detail::row_distance_ranks(dy);

  // Bin cross and self products by rank cell, then prefix-sum so that
  // cell (k, l) holds the masked sums for the k-/l-neighborhood scale.
  std::vector<double> cross(un * un, 0.0);
  std::vector<double> self_x(un, 0.0);
  std::vector<double> self_y(un, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t flat = static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j);
      const std::size_t rx = static_cast<std::size_t>(rank_x[flat] - 1);
      const std::size_t ry = static_cast<std::size_t>(rank_y[flat] - 1);
      const double vx = cx(i, j);
      const double vy = cy(i, j);
      cross[rx * un + ry] += vx * vy;
      self_x[rx] += vx * vx;
      self_y[ry] += vy * vy;
    }
  }
  for (std::size_t k = 0; k < un; ++k) {
    double run = 0.0;
    for (std::size_t l = 0; l < un; ++l) {
      run += cross[k * un + l];
      cross[k * un + l] = run + (k > 0 ? cross[(k - 1) * un + l] : 0.0);
    }
  }
  std::partial_sum(self_x.begin(), self_x.end(), self_x.begin());
  std::partial_sum(self_y.begin(), self_y.end(), self_y.begin());

  std::vector<double> map(un * un);
  for (std::size_t k = 0; k < un; ++k) {
    for (std::size_t l = 0; l < un; ++l) {
      const double denom = self_x[k] * self_y[l];
      map[k * un + l] =
          denom > 0.0
              ? std::clamp(cross[k * un + l] / std::sqrt(denom), -1.0, 1.0)
              : 0.0;
    }
  }

  double most_negative = 0.0;
  for (double v : map) most_negative = std::min(most_negative, v);
  const double tau = std::max(2.0 / static_cast<double>(n), -most_negative);

  MgcResult result;
  const auto region = detail::largest_connected_region(map, n, tau);
  if (region.size() > 2 * un) {
    int best_cell = region.front();
    for (int c : region) {
      const double v = map[static_cast<std::size_t>(c)];
      const double best = map[static_cast<std::size_t>(best_cell)];
      if (v > best || (v == best && c < best_cell)) best_cell = c;  // row-major ties
    }
    result.value = map[static_cast<std::size_t>(best_cell)];
    result.scale_k = best_cell / n + 1;
    result.scale_l = best_cell % n + 1;
  } else {
    result.value = map[(un - 1) * un + (un - 1)];
    result.scale_k = n;
    result.scale_l = n;
  }
  result.local_map = Eigen::Map<const Matrix>(map.data(), n, n).transpose();
  return result;
}

}  // namespace mvindep
