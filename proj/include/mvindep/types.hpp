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

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mvindep {

/// Sample matrix: rows are observations, columns are dimensions.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorKind {
  invalid_data,
  size_error,
  dimension_error,
  zero_variance,
  degenerate_bandwidth,
  numerical_error,
  parse_error,
  spec_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_data: return "InvalidData";
    case ErrorKind::size_error: return "SizeError";
    case ErrorKind::dimension_error: return "DimensionError";
    case ErrorKind::zero_variance: return "ZeroVariance";
    case ErrorKind::degenerate_bandwidth: return "DegenerateBandwidth";
    case ErrorKind::numerical_error: return "NumericalError";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::spec_error: return "SpecError";
  }
  return "Error";
}

/// All library failures carry one of the ErrorKind tags so callers (and the
/// CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

/// Checks the sample-matrix contract: at least `min_rows` observations, at
/// least one column, every entry finite.
inline void validate_data(const Matrix& x, Index min_rows = 2) {
  require(x.cols() >= 1, ErrorKind::invalid_data, "matrix has no columns");
  require(x.rows() >= min_rows, ErrorKind::size_error,
          "need at least " + std::to_string(min_rows) + " rows, got " +
              std::to_string(x.rows()));
  require(x.allFinite(), ErrorKind::invalid_data,
          "matrix contains NaN or infinite entries");
}

inline void require_same_rows(const Matrix& x, const Matrix& y) {
  require(x.rows() == y.rows(), ErrorKind::size_error,
          "x has " + std::to_string(x.rows()) + " rows but y has " +
              std::to_string(y.rows()));
}

/// True when every observation equals the first one (degenerate data: all
/// pairwise distances are exactly zero).
inline bool all_rows_identical(const Matrix& x) {
  for (Index i = 1; i < x.rows(); ++i) {
    if (x.row(i) != x.row(0)) return false;
  }
  return true;
}

}  // namespace mvindep
