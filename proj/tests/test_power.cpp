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

#include <cmath>

#include "gtest/gtest.h"
#include "mvindep/power.hpp"

namespace {

using mvindep::PowerAxis;
using mvindep::PowerCurve;
using mvindep::SimKind;
using mvindep::Statistic;
using mvindep::StatResult;

TEST(EstimatePower, ConstantStatisticNeverRejects) {
  const Statistic constant{"constant", false,
                           [](const mvindep::Matrix&, const mvindep::Matrix&) {
                             return StatResult{1.0, std::nullopt, std::nullopt};
                           }};
  const PowerCurve curve =
      mvindep::estimate_power(constant, SimKind::linear, PowerAxis::sample_size,
                              {20, 40}, 0.05, 50, 50, 3);
  for (double p : curve.power) EXPECT_DOUBLE_EQ(p, 0.0);
}

TEST(EstimatePower, LevelNearAlphaOnIndependentData) {
  const PowerCurve curve = mvindep::estimate_power(
      mvindep::find_statistic("dcorr"), SimKind::multimodal_independence,
      PowerAxis::sample_size, {50}, 0.05, 200, 100, 17);
  EXPECT_GE(curve.power[0], 0.005);
  EXPECT_LE(curve.power[0], 0.11);
}

TEST(EstimatePower, LinearPowerGrowsWithSampleSize) {
  const PowerCurve curve = mvindep::estimate_power(
      mvindep::find_statistic("dcorr"), SimKind::linear, PowerAxis::sample_size,
      {10, 100}, 0.05, 100, 100, 23, /*kappa=*/1.0);
  EXPECT_GT(curve.power[1], 0.9);
  EXPECT_LE(curve.power[0], curve.power[1] + 0.1);
}

TEST(EstimatePower, DimensionAxisSweepsP) {
  const PowerCurve curve = mvindep::estimate_power(
      mvindep::find_statistic("dcorr"), SimKind::linear, PowerAxis::dimension,
      {1, 3}, 0.05, 20, 50, 5);
  EXPECT_EQ(curve.power.size(), 2u);
  EXPECT_EQ(curve.axis, PowerAxis::dimension);
}

TEST(EstimatePower, ReproducibleAcrossThreadCounts) {
  const auto run = [](int jobs) {
    return mvindep::estimate_power(mvindep::find_statistic("dcorr"),
                                   SimKind::linear, PowerAxis::sample_size,
                                   {15, 30}, 0.05, 60, 60, 99, 1.0, jobs);
  };
  const PowerCurve a = run(1);
  const PowerCurve b = run(4);
  const PowerCurve c = run(1);
  EXPECT_EQ(a.power, b.power);
  EXPECT_EQ(a.power, c.power);
}

TEST(EstimatePower, StderrIsBinomial) {
  PowerCurve curve;
  curve.replicates = 400;
  curve.grid = {10};
  curve.power = {0.25};
  EXPECT_NEAR(curve.stderr_at(0), std::sqrt(0.25 * 0.75 / 400.0), 1e-15);
}

TEST(EstimatePower, RejectsBadArguments) {
  const Statistic& dcorr = mvindep::find_statistic("dcorr");
  const auto expect_spec_error = [&](auto&&... args) {
    try {
      mvindep::estimate_power(args...);
      FAIL() << "expected SpecError";
    } catch (const mvindep::Error& e) {
      EXPECT_EQ(e.kind(), mvindep::ErrorKind::spec_error);
    }
  };
  expect_spec_error(dcorr, SimKind::linear, PowerAxis::sample_size,
                    std::vector<int>{10, 20}, 1.5, 10, 10, 0, 1.0, 0);
  expect_spec_error(dcorr, SimKind::linear, PowerAxis::sample_size,
                    std::vector<int>{}, 0.05, 10, 10, 0, 1.0, 0);
  expect_spec_error(dcorr, SimKind::linear, PowerAxis::sample_size,
                    std::vector<int>{20, 10}, 0.05, 10, 10, 0, 1.0, 0);
}

TEST(WallTimeBench, SingleRowPositiveTime) {
  const auto rows =
      mvindep::wall_time_bench(mvindep::find_statistic("dcorr"), {100}, 3);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].n, 100);
  EXPECT_GT(rows[0].mean_seconds, 0.0);
  EXPECT_EQ(rows[0].statistic_name, "dcorr");
}

TEST(WallTimeBench, OneRowPerGridPoint) {
  const auto rows =
      mvindep::wall_time_bench(mvindep::find_statistic("pearson"), {50, 100, 200}, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].n, 50);
  EXPECT_EQ(rows[2].n, 200);
}

}  // namespace
