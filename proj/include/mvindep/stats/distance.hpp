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

#include <cmath>

#include "mvindep/pairwise.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

namespace detail {

// trace(A B) for symmetric A, B equals the entrywise product sum.
inline double trace_product(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b).sum();
}

struct NormalizedTrace {
  double cross = 0.0;
  double self_x = 0.0;
  double self_y = 0.0;

  double ratio(const char* what) const {
    require(self_x > 0.0 && self_y > 0.0, ErrorKind::zero_variance,
            std::string(what) + " self term is zero (constant data)");
    return cross / std::sqrt(self_x * self_y);
  }
};

inline NormalizedTrace centered_trace_terms(const PairwiseMatrix& mx,
                                            const PairwiseMatrix& my,
                                            Centering scheme) {
  const Matrix cx = center(mx, scheme).values;
  const Matrix cy = center(my, scheme).values;
  return {trace_product(cx, cy), trace_product(cx, cx),
          trace_product(cy, cy)};
}

}  // namespace detail

/// Distance-matrix congruence with off-diagonal-mean centering,
/// trace(Cx Cy) normalized by the two self traces.
inline double mantel(const Matrix& x, const Matrix& y) {
  validate_data(x, 2);
  validate_data(y, 2);
  require_same_rows(x, y);
  const auto t = detail::centered_trace_terms(
      euclidean_distances(x), euclidean_distances(y), Centering::global_mean);
  return t.ratio("mantel");
}

/// Distance covariance. Biased form: trace(Dx H Dy H)/n^2 via double
/// centering. Unbiased form: trace(Cx Cy)/(n(n-3)) with the four-term
/// centering; requires n >= 4 and has expectation zero under independence.
inline double dcov(const Matrix& x, const Matrix& y, bool unbiased = false) {
  validate_data(x, unbiased ? 4 : 2);
  validate_data(y, unbiased ? 4 : 2);
  require_same_rows(x, y);
  const Index n = x.rows();
  const Centering scheme = unbiased ? Centering::unbiased : Centering::double_h;
  const Matrix cx = center(euclidean_distances(x), scheme).values;
  const Matrix cy = center(euclidean_distances(y), scheme).values;
  const double norm = unbiased
                          ? static_cast<double>(n) * (n - 3)
                          : static_cast<double>(n) * static_cast<double>(n);
  return detail::trace_product(cx, cy) / norm;
}

/// Distance correlation: dcov normalized by the geometric mean of the two
/// self-covariances. The biased variant lies in [0, 1]; the unbiased one may
/// be negative.
inline double dcorr(const Matrix& x, const Matrix& y, bool unbiased = false) {
  validate_data(x, unbiased ? 4 : 2);
  validate_data(y, unbiased ? 4 : 2);
  require_same_rows(x, y);
  const Centering scheme = unbiased ? Centering::unbiased : Centering::double_h;
  const auto t = detail::centered_trace_terms(euclidean_distances(x),
                                              euclidean_distances(y), scheme);
  return t.ratio("dcov");
}

/// Kernel association in covariance form: trace(Kx H Ky H)/n^2 for the
/// Gaussian median-bandwidth kernels (biased), or the four-term-centered
/// trace over n(n-3) (unbiased).
inline double hsic_cov(const Matrix& x, const Matrix& y, bool unbiased = false) {
  validate_data(x, unbiased ? 4 : 2);
  validate_data(y, unbiased ? 4 : 2);
  require_same_rows(x, y);
  const Index n = x.rows();
  const Centering scheme = unbiased ? Centering::unbiased : Centering::double_h;
  const Matrix cx = center(gaussian_kernel(x), scheme).values;
  const Matrix cy = center(gaussian_kernel(y), scheme).values;
  const double norm = unbiased
                          ? static_cast<double>(n) * (n - 3)
                          : static_cast<double>(n) * static_cast<double>(n);
  return detail::trace_product(cx, cy) / norm;
}

/// Normalized kernel association (correlation-style output): hsic_cov over
/// the geometric mean of the self terms.
inline double hsic(const Matrix& x, const Matrix& y, bool unbiased = false) {
  validate_data(x, unbiased ? 4 : 2);
  validate_data(y, unbiased ? 4 : 2);
  require_same_rows(x, y);
  const Centering scheme = unbiased ? Centering::unbiased : Centering::double_h;
  const auto t = detail::centered_trace_terms(gaussian_kernel(x),
                                              gaussian_kernel(y), scheme);
  return t.ratio("hsic");
}

}  // namespace mvindep
