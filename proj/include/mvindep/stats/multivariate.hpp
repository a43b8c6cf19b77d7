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

#include "mvindep/types.hpp"

namespace mvindep {

namespace detail {

inline Matrix column_centered(const Matrix& m) {
  return m.rowwise() - m.colwise().mean();
}

}  // namespace detail

/// Congruence coefficient between the column spaces of x and y: the squared
/// cross-covariance mass normalized by the self terms,
///   ||Sxy||_F^2 / (||Sxx||_F ||Syy||_F),
/// with columns centered first. Reduces to pearson^2 when p = q = 1 and
/// equals 1 for x against itself.
inline double rv(const Matrix& x, const Matrix& y) {
  validate_data(x, 2);
  validate_data(y, 2);
  require_same_rows(x, y);
  const Matrix xc = detail::column_centered(x);
  const Matrix yc = detail::column_centered(y);
  const Matrix sxy = xc.transpose() * yc;
  const double num = sxy.squaredNorm();
  const double txx = (xc.transpose() * xc).norm();
  const double tyy = (yc.transpose() * yc).norm();
  require(txx > 0.0 && !all_rows_identical(x), ErrorKind::zero_variance,
          "x has no variance after centering");
  require(tyy > 0.0 && !all_rows_identical(y), ErrorKind::zero_variance,
          "y has no variance after centering");
  return num / (txx * tyy);
}

/// First canonical correlation: the largest singular value of
/// Sxx^{-1/2} Sxy Syy^{-1/2} after column centering. The self-covariances get
/// a ridge of 1e-10 * trace/dim before inversion so exact rank deficiency
/// resolves deterministically.
inline double cca(const Matrix& x, const Matrix& y) {
  validate_data(x, 2);
  validate_data(y, 2);
  require_same_rows(x, y);
  require(!all_rows_identical(x) && !all_rows_identical(y),
          ErrorKind::numerical_error, "covariance is singular (constant data)");
  const Matrix xc = detail::column_centered(x);
  const Matrix yc = detail::column_centered(y);
  Matrix sxx = xc.transpose() * xc;
  Matrix syy = yc.transpose() * yc;
  const Matrix sxy = xc.transpose() * yc;
  sxx.diagonal().array() += 1e-10 * sxx.trace() / static_cast<double>(sxx.rows());
  syy.diagonal().array() += 1e-10 * syy.trace() / static_cast<double>(syy.rows());

  Eigen::SelfAdjointEigenSolver<Matrix> ex(sxx);
  Eigen::SelfAdjointEigenSolver<Matrix> ey(syy);
  require(ex.info() == Eigen::Success && ey.info() == Eigen::Success &&
              ex.eigenvalues().minCoeff() > 0.0 &&
              ey.eigenvalues().minCoeff() > 0.0,
          ErrorKind::numerical_error,
          "covariance is singular after regularization");
  const Matrix m =
      ex.operatorInverseSqrt() * sxy * ey.operatorInverseSqrt();
  Eigen::JacobiSVD<Matrix> svd(m);
  const double r = svd.singularValues()(0);
  require(std::isfinite(r), ErrorKind::numerical_error,
          "canonical correlation did not evaluate to a finite value");
  return std::clamp(r, 0.0, 1.0);
}

}  // namespace mvindep
