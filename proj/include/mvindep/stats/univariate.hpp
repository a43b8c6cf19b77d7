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
#include <vector>

#include "mvindep/types.hpp"

namespace mvindep {

namespace detail {

inline Vector univariate_column(const Matrix& m, const char* which) {
  require(m.cols() == 1, ErrorKind::dimension_error,
          std::string(which) + " must have exactly one column, got " +
              std::to_string(m.cols()));
  return m.col(0);
}

inline void require_nonconstant(const Vector& v, const char* which) {
  require(v.maxCoeff() > v.minCoeff(), ErrorKind::zero_variance,
          std::string(which) + " is constant");
}

inline double pearson_impl(const Vector& x, const Vector& y) {
  const double mx = x.mean();
  const double my = y.mean();
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    const double dx = x(i) - mx;
    const double dy = y(i) - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace detail

/// Average ranks (1-based); tied values share the mean of their positions.
/// Stable sort keeps the result deterministic.
inline std::vector<double> average_ranks(const Vector& v) {
  const Index n = v.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return v(a) < v(b); });
  std::vector<double> ranks(static_cast<std::size_t>(n));
  Index i = 0;
  while (i < n) {
    Index j = i;
    while (j + 1 < n && v(order[static_cast<std::size_t>(j + 1)]) ==
                            v(order[static_cast<std::size_t>(i)]))
      ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (Index k = i; k <= j; ++k)
      ranks[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = r;
    i = j + 1;
  }
  return ranks;
}

/// Sample linear correlation of two univariate samples.
inline double pearson(const Matrix& x, const Matrix& y) {
  validate_data(x, 2);
  validate_data(y, 2);
  require_same_rows(x, y);
  const Vector xv = detail::univariate_column(x, "x");
  const Vector yv = detail::univariate_column(y, "y");
  detail::require_nonconstant(xv, "x");
  detail::require_nonconstant(yv, "y");
  return detail::pearson_impl(xv, yv);
}

/// Pearson correlation of the average-rank transforms.
inline double spearman(const Matrix& x, const Matrix& y) {
  validate_data(x, 2);
  validate_data(y, 2);
  require_same_rows(x, y);
  const Vector xv = detail::univariate_column(x, "x");
  const Vector yv = detail::univariate_column(y, "y");
  detail::require_nonconstant(xv, "x");
  detail::require_nonconstant(yv, "y");
  const std::vector<double> rx = average_ranks(xv);
  const std::vector<double> ry = average_ranks(yv);
  const Vector rxv = Eigen::Map<const Vector>(rx.data(), static_cast<Index>(rx.size()));
  const Vector ryv = Eigen::Map<const Vector>(ry.data(), static_cast<Index>(ry.size()));
  return detail::pearson_impl(rxv, ryv);
}

/// Kendall rank correlation. Tau-a when neither sample has ties; the
/// tie-corrected tau-b otherwise (they coincide on tie-free data). Pairs tied
/// in x or in y count as neither concordant nor discordant; the correction
/// terms are sums of t(t-1)/2 over tie groups of each sample.
inline double kendall(const Matrix& x, const Matrix& y) {
  validate_data(x, 2);
  validate_data(y, 2);
  require_same_rows(x, y);
  const Vector xv = detail::univariate_column(x, "x");
  const Vector yv = detail::univariate_column(y, "y");
  detail::require_nonconstant(xv, "x");
  detail::require_nonconstant(yv, "y");

  const Index n = xv.size();
  long long concordant = 0, discordant = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double dx = xv(i) - xv(j);
      const double dy = yv(i) - yv(j);
      const double s = dx * dy;
      if (dx == 0.0 || dy == 0.0) continue;
      if (s > 0.0)
        ++concordant;
      else
        ++discordant;
    }
  }

  const auto tie_pairs = [](const Vector& v) {
    std::vector<double> sorted(v.data(), v.data() + v.size());
    std::sort(sorted.begin(), sorted.end());
    long long pairs = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      const long long t = static_cast<long long>(j - i + 1);
      pairs += t * (t - 1) / 2;
      i = j + 1;
    }
    return pairs;
  };

  const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
  const long long n1 = tie_pairs(xv);
  const long long n2 = tie_pairs(yv);
  require(n0 > n1 && n0 > n2, ErrorKind::zero_variance,
          "all values tied in one variable");
  if (n1 == 0 && n2 == 0)
    return static_cast<double>(concordant - discordant) / static_cast<double>(n0);
  return static_cast<double>(concordant - discordant) /
         std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
}

}  // namespace mvindep
