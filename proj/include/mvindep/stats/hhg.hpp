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
#include <numeric>
#include <vector>

#include "mvindep/pairwise.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

namespace detail {

class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(int pos) {  // 1-based
    for (; pos < static_cast<int>(tree_.size()); pos += pos & (-pos))
      ++tree_[static_cast<std::size_t>(pos)];
  }

  int prefix(int pos) const {  // count of inserted positions <= pos
    int s = 0;
    for (; pos > 0; pos -= pos & (-pos)) s += tree_[static_cast<std::size_t>(pos)];
    return s;
  }

  void clear() { std::fill(tree_.begin(), tree_.end(), 0); }

 private:
  std::vector<int> tree_;
};

}  // namespace detail

/// Distance-rank association. For every ordered pair (i, j) the remaining
/// n-2 points are cross-classified by d(x_i, x_k) <= d(x_i, x_j) against
/// d(y_i, y_k) <= d(y_i, y_j) (ties land in the <= cell), and the 2x2 table's
/// chi-square contribution
///   S(i,j) = (n-2) (A12 A21 - A11 A22)^2 / (A1. A2. A.1 A.2)
/// is accumulated; any zero margin contributes 0. The per-anchor counting is
/// done with a Fenwick tree over distance ranks (O(n^2 log n) overall), with
/// equal-distance groups inserted before they are queried so the <= semantics
/// are exact.
inline double hhg(const Matrix& x, const Matrix& y) {
  validate_data(x, 3);
  validate_data(y, 3);
  require_same_rows(x, y);
  const Index n = x.rows();
  const Matrix dx = euclidean_distances(x).values;
  const Matrix dy = euclidean_distances(y).values;

  const int m = static_cast<int>(n) - 1;  // points per anchor
  std::vector<double> a(static_cast<std::size_t>(m));
  std::vector<double> b(static_cast<std::size_t>(m));
  std::vector<double> b_sorted(static_cast<std::size_t>(m));
  std::vector<int> order(static_cast<std::size_t>(m));
  std::vector<int> b_pos(static_cast<std::size_t>(m));
  detail::Fenwick bit(m);

  const double span = static_cast<double>(n - 2);
  double total = 0.0;

  for (Index i = 0; i < n; ++i) {
    int t = 0;
    for (Index k = 0; k < n; ++k) {
      if (k == i) continue;
      a[static_cast<std::size_t>(t)] = dx(i, k);
      b[static_cast<std::size_t>(t)] = dy(i, k);
      ++t;
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int u, int v) { return a[static_cast<std::size_t>(u)] <
                                         a[static_cast<std::size_t>(v)]; });
    b_sorted = b;
    std::sort(b_sorted.begin(), b_sorted.end());
    for (int j = 0; j < m; ++j) {
      b_pos[static_cast<std::size_t>(j)] = static_cast<int>(
          std::upper_bound(b_sorted.begin(), b_sorted.end(),
                           b[static_cast<std::size_t>(j)]) -
          b_sorted.begin());
    }
    bit.clear();

    int g = 0;
    while (g < m) {
      int h = g;  // [g, h] is a group of equal x-distances
      while (h + 1 < m &&
             a[static_cast<std::size_t>(order[static_cast<std::size_t>(h + 1)])] ==
                 a[static_cast<std::size_t>(order[static_cast<std::size_t>(g)])])
        ++h;
      for (int q = g; q <= h; ++q)
        bit.add(b_pos[static_cast<std::size_t>(order[static_cast<std::size_t>(q)])]);
      const double row1 = static_cast<double>(h + 1) - 1.0;  // A1. = #{a_k <= a_j} - self
      for (int q = g; q <= h; ++q) {
        const int j = order[static_cast<std::size_t>(q)];
        const double a11 =
            static_cast<double>(bit.prefix(b_pos[static_cast<std::size_t>(j)])) - 1.0;
        const double col1 =
            static_cast<double>(b_pos[static_cast<std::size_t>(j)]) - 1.0;  // A.1
        const double a12 = row1 - a11;
        const double a21 = col1 - a11;
        const double a22 = span - a11 - a12 - a21;
        const double row2 = span - row1;
        const double col2 = span - col1;
        if (row1 > 0.0 && row2 > 0.0 && col1 > 0.0 && col2 > 0.0) {
          const double d = a12 * a21 - a11 * a22;
          total += span * d * d / (row1 * row2 * col1 * col2);
        }
      }
      g = h + 1;
    }
  }
  return total;
}

}  // namespace mvindep
