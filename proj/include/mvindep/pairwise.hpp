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
#include <vector>

#include "mvindep/types.hpp"

namespace mvindep {

enum class PairwiseKind { distance, kernel };

/// Symmetric n x n matrix of pairwise distances or kernel values.
struct PairwiseMatrix {
  Matrix values;
  PairwiseKind kind = PairwiseKind::distance;

  Index size() const { return values.rows(); }
};

enum class Centering {
  global_mean,   // subtract the off-diagonal mean (diagonal stays zero)
  double_h,      // H m H with H = I - J/n
  unbiased,      // four-term centering, zero diagonal
  column_mean,   // subtract each column's mean over its off-diagonal entries
};

struct CenteredMatrix {
  Matrix values;
  Centering scheme = Centering::double_h;
};

/// Euclidean distance matrix of the rows of x.
inline PairwiseMatrix euclidean_distances(const Matrix& x) {
  validate_data(x, 2);
  const Index n = x.rows();
  Matrix d = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double v = (x.row(i) - x.row(j)).norm();
      d(i, j) = v;
      d(j, i) = v;
    }
  }
  return {std::move(d), PairwiseKind::distance};
}

/// Median of the n(n-1)/2 off-diagonal entries of a distance matrix; the
/// midpoint of the two central order statistics when the count is even.
inline double median_pairwise_distance(const PairwiseMatrix& d) {
  const Index n = d.size();
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) vals.push_back(d.values(i, j));
  const std::size_t m = vals.size();
  const std::size_t mid = m / 2;
  std::nth_element(vals.begin(), vals.begin() + mid, vals.end());
  double med = vals[mid];
  if (m % 2 == 0) {
    std::nth_element(vals.begin(), vals.begin() + (mid - 1),
                     vals.begin() + mid);
    med = 0.5 * (med + vals[mid - 1]);
  }
  return med;
}

/// Gaussian kernel matrix K(i,j) = exp(-d(i,j)^2 / (2 sigma^2)) with sigma the
/// median off-diagonal Euclidean distance of x. Unit diagonal. When duplicate
/// points drag the overall median to zero, the median of the strictly
/// positive distances takes over; only fully constant data is an error.
inline PairwiseMatrix gaussian_kernel(const Matrix& x) {
  PairwiseMatrix d = euclidean_distances(x);
  double sigma = median_pairwise_distance(d);
  if (sigma <= 0.0) {
    const Index n = d.size();
    std::vector<double> positive;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (d.values(i, j) > 0.0) positive.push_back(d.values(i, j));
    require(!positive.empty(), ErrorKind::degenerate_bandwidth,
            "all pairwise distances are zero (constant data)");
    const std::size_t mid = positive.size() / 2;
    std::nth_element(positive.begin(), positive.begin() + mid, positive.end());
    sigma = positive[mid];
    if (positive.size() % 2 == 0) {
      std::nth_element(positive.begin(), positive.begin() + (mid - 1),
                       positive.begin() + mid);
      sigma = 0.5 * (sigma + positive[mid - 1]);
    }
  }
  const Index n = d.size();
  Matrix k(n, n);
  const double inv = 1.0 / (2.0 * sigma * sigma);
  for (Index i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (Index j = i + 1; j < n; ++j) {
      const double v = std::exp(-d.values(i, j) * d.values(i, j) * inv);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return {std::move(k), PairwiseKind::kernel};
}

namespace detail {

inline void check_square_symmetric(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::size_error,
          "pairwise matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  require((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale,
          ErrorKind::invalid_data, "pairwise matrix must be symmetric");
}

}  // namespace detail

/// Applies one of the four centering schemes to a pairwise matrix.
///
/// global_mean: m_ij - S/(n(n-1)) on off-diagonal entries, S the full-matrix
///   sum; diagonal zero. Every entry of the result sums to zero for a
///   zero-diagonal input.
/// double_h:    H m H, annihilates row and column means; idempotent.
/// unbiased:    m_ij - r_i/(n-2) - c_j/(n-2) + S/((n-1)(n-2)) off-diagonal,
///   zero diagonal; requires n >= 4.
/// column_mean: m_ij minus the mean of column j over its n-1 off-diagonal
///   entries; diagonal zeroed, so columns sum to zero exactly.
inline CenteredMatrix center(const PairwiseMatrix& m, Centering scheme) {
  detail::check_square_symmetric(m.values);
  const Index n = m.size();
  const Matrix& d = m.values;
  Matrix c(n, n);
  switch (scheme) {
    case Centering::global_mean: {
      require(n >= 2, ErrorKind::size_error, "global_mean centering needs n >= 2");
      const double mean = d.sum() / (static_cast<double>(n) * (n - 1));
      c = d.array() - mean;
      c.diagonal().setZero();
      break;
    }
    case Centering::double_h: {
      require(n >= 2, ErrorKind::size_error, "double_h centering needs n >= 2");
      const Vector row_means = d.rowwise().mean();
      const Vector col_means = d.colwise().mean();
      const double grand = d.mean();
      c = d;
      c.colwise() -= row_means;
      c.rowwise() -= col_means.transpose();
      c.array() += grand;
      break;
    }
    case Centering::unbiased: {
      require(n >= 4, ErrorKind::size_error, "unbiased centering needs n >= 4");
      const Vector row_sums = d.rowwise().sum();
      const Vector col_sums = d.colwise().sum();
      const double total = d.sum();
      const double inv_n2 = 1.0 / static_cast<double>(n - 2);
      const double inv_n12 = 1.0 / (static_cast<double>(n - 1) * (n - 2));
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          c(i, j) = (i == j) ? 0.0
                             : d(i, j) - row_sums(i) * inv_n2 -
                                   col_sums(j) * inv_n2 + total * inv_n12;
        }
      }
      break;
    }
    case Centering::column_mean: {
      require(n >= 2, ErrorKind::size_error, "column_mean centering needs n >= 2");
      for (Index j = 0; j < n; ++j) {
        const double mean = (d.col(j).sum() - d(j, j)) / static_cast<double>(n - 1);
        for (Index i = 0; i < n; ++i) c(i, j) = d(i, j) - mean;
        c(j, j) = 0.0;
      }
      break;
    }
  }
  return {std::move(c), scheme};
}

}  // namespace mvindep
