// Copyright 2026 The graphent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphent/crease.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"
#include "graphent/phase_analysis.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

TEST(CreaseTest, FitLineExactData) {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, 3, 5, 7};
  const LinearFit f = fit_line(x, y);
  EXPECT_NEAR(f.intercept, 1.0, 1e-14);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.slope_se, 0.0, 1e-14);
  EXPECT_EQ(f.points, 4);
}

TEST(CreaseTest, FitLineStandardErrors) {
  // Residuals +-1 alternating around y = x: rss = 4, sigma^2 = 2, sxx = 5.
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, 0, 3, 2};
  const LinearFit f = fit_line(x, y);
  EXPECT_NEAR(f.slope, 0.6, 1e-14);
  const double rss = [&] {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += std::pow(y[i] - f.intercept - f.slope * x[i], 2);
    return s;
  }();
  EXPECT_NEAR(f.slope_se, std::sqrt(rss / 2 / 5), 1e-14);
}

TEST(CreaseTest, HalfSliceScanAgreesWithClosedForm) {
  OptimConfig c;
  c.m = 8;
  c.multistart_count = 2;
  const std::vector<double> deltas{1e-3, 1e-2};
  const CreaseScan scan = crease_scan(0.5, Motif::triangle(), deltas, c);
  ASSERT_EQ(scan.left.size(), 2u);
  for (const auto& p : scan.left) {
    EXPECT_NEAR(p.s_value, oracle::half_slice_entropy(p.t), 1e-6);
    EXPECT_GT(p.drop, 0.0);
  }
  for (const auto& p : scan.right) EXPECT_GT(p.drop, 0.0);
  ASSERT_TRUE(scan.constants.has_value());
  for (const auto& b : scan.bound_checks) EXPECT_TRUE(b.holds) << b.bound << " " << b.delta;
  EXPECT_THROW(crease_scan(1.0, Motif::triangle(), deltas, c), Error);
}

TEST(CreaseTest, VerdictOnSyntheticBranches) {
  CreaseScan scan{.e = 0.5, .motif_edges = 3, .t_curve = 0.125,
                  .on_curve = maximize_entropy({0.5, 0.125}, Motif::triangle(), OptimConfig{.m = 2, .multistart_count = 0})};
  for (double d : {1e-4, 1e-3, 1e-2, 2e-2}) {
    scan.left.push_back({.delta = d, .status = SolveStatus::kConverged, .quotient = 3.0 + 0.1 * d});
    scan.right.push_back({.delta = d, .status = SolveStatus::kConverged, .quotient = 1.0 - 0.2 * d});
  }
  CreaseVerdict v = crease_verdict(scan);
  EXPECT_EQ(v.verdict, "crease detected");
  EXPECT_NEAR(v.left_derivative, 3.0, 1e-9);
  EXPECT_NEAR(v.right_derivative, -1.0, 1e-9);

  for (auto& p : scan.left) p.status = SolveStatus::kInfeasible;
  EXPECT_EQ(crease_verdict(scan).verdict, "one-sided");
}

}  // namespace
}  // namespace graphent
