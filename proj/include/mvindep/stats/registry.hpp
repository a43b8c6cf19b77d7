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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mvindep/stats/distance.hpp"
#include "mvindep/stats/hhg.hpp"
#include "mvindep/stats/mgc.hpp"
#include "mvindep/stats/multivariate.hpp"
#include "mvindep/stats/univariate.hpp"
#include "mvindep/types.hpp"

namespace mvindep {

/// Uniform statistic output. scale/local_map are populated by mgc only.
struct StatResult {
  double value = 0.0;
  std::optional<std::pair<int, int>> scale;
  std::optional<Matrix> local_map;
};

/// A named dependence statistic. signed_value marks statistics whose sign
/// carries direction (pearson, kendall, spearman, udcorr); permutation tests
/// compare those by absolute value.
struct Statistic {
  std::string name;
  bool signed_value = false;
  std::function<StatResult(const Matrix&, const Matrix&)> fn;

  StatResult operator()(const Matrix& x, const Matrix& y) const {
    return fn(x, y);
  }
};

namespace detail {

inline std::function<StatResult(const Matrix&, const Matrix&)> wrap(
    double (*f)(const Matrix&, const Matrix&)) {
  return [f](const Matrix& x, const Matrix& y) {
    return StatResult{f(x, y), std::nullopt, std::nullopt};
  };
}

}  // namespace detail

/// The full statistic set, in the order the CLI lists them.
inline const std::vector<Statistic>& all_statistics() {
  static const std::vector<Statistic> statistics = [] {
    std::vector<Statistic> s;
    s.push_back({"pearson", true, detail::wrap(&pearson)});
    s.push_back({"rv", false, detail::wrap(&rv)});
    s.push_back({"cca", false, detail::wrap(&cca)});
    s.push_back({"kendall", true, detail::wrap(&kendall)});
    s.push_back({"spearman", true, detail::wrap(&spearman)});
    s.push_back({"mantel", false, detail::wrap(&mantel)});
    s.push_back({"hhg", false, detail::wrap(&hhg)});
    s.push_back({"hsic", false, [](const Matrix& x, const Matrix& y) {
                   return StatResult{hsic(x, y, false), std::nullopt, std::nullopt};
                 }});
    s.push_back({"dcorr", false, [](const Matrix& x, const Matrix& y) {
                   return StatResult{dcorr(x, y, false), std::nullopt, std::nullopt};
                 }});
    s.push_back({"udcorr", true, [](const Matrix& x, const Matrix& y) {
                   return StatResult{dcorr(x, y, true), std::nullopt, std::nullopt};
                 }});
    s.push_back({"mgc", false, [](const Matrix& x, const Matrix& y) {
                   MgcResult r = mgc(x, y);
                   return StatResult{r.value,
                                     std::make_pair(r.scale_k, r.scale_l),
                                     std::move(r.local_map)};
                 }});
    return s;
  }();
  return statistics;
}

inline std::string statistic_names_joined(const char* sep = ", ") {
  std::string out;
  for (const Statistic& s : all_statistics()) {
    if (!out.empty()) out += sep;
    out += s.name;
  }
  return out;
}

/// Looks a statistic up by name; unknown names raise SpecError carrying the
/// full valid-name list.
inline const Statistic& find_statistic(std::string_view name) {
  for (const Statistic& s : all_statistics()) {
    if (s.name == name) return s;
  }
  throw Error(ErrorKind::spec_error,
              "unknown statistic '" + std::string(name) +
                  "'; valid statistics: " + statistic_names_joined());
}

}  // namespace mvindep
