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

#include "graphent/ergm.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

double scalar(double b1, double b2, double u) { return -oracle::i0(u) + b1 * u + b2 * u * u * u; }

// Global max of the scalar function on a fine grid.
double grid_max(double b1, double b2) {
  double best = -1e300;
  for (int i = 1; i < 200000; ++i) best = std::max(best, scalar(b1, b2, i / 200000.0));
  return best;
}

TEST(ErgmTest, ScalarMaximaMatchGridSearch) {
  for (const auto& [b1, b2] : std::vector<std::pair<double, double>>{{0, 0}, {-1, 1.5}, {2, -1}, {-0.93, 1}}) {
    const ConstantFreeEnergy c = psi_constant({b1, b2});
    EXPECT_NEAR(c.psi_er, grid_max(b1, b2), 1e-9) << b1 << " " << b2;
  }
  const ConstantFreeEnergy zero = psi_constant({0, 0});
  ASSERT_EQ(zero.u_star.size(), 1u);
  EXPECT_NEAR(zero.u_star[0], 0.5, 1e-12);
  EXPECT_NEAR(zero.psi_er, 0.5 * std::log(2.0), 1e-15);
}

TEST(ErgmTest, LocalMaximaAreStationary) {
  for (const auto& mx : scalar_local_maxima({-0.93, 1.0})) {
    const double h = 1e-6;
    EXPECT_NEAR((scalar(-0.93, 1.0, mx.u + h) - scalar(-0.93, 1.0, mx.u - h)) / (2 * h), 0.0, 1e-6);
    EXPECT_LE(scalar(-0.93, 1.0, mx.u + 1e-3), mx.value);
    EXPECT_LE(scalar(-0.93, 1.0, mx.u - 1e-3), mx.value);
  }
}

TEST(ErgmTest, TransitionPointHasTiedMaximizers) {
  const TransitionPoint p = transition_point(1.0);
  EXPECT_LT(p.psi_gap, 1e-9);
  EXPECT_GT(p.u_high - p.u_low, 1e-3);
  EXPECT_NEAR(scalar(p.beta1_critical, 1.0, p.u_low), scalar(p.beta1_critical, 1.0, p.u_high), 1e-9);
  EXPECT_THROW(transition_point(-0.6), Error);
  EXPECT_THROW(transition_point(0.3), Error);
}

TEST(ErgmTest, TransitionCurveSeparatesTransitionFree) {
  const TransitionCurve c = transition_curve(0.0, 2.0, 5);
  EXPECT_EQ(c.points.size() + c.no_transition.size(), 5u);
  for (double b2 : c.no_transition) EXPECT_LE(b2, 0.5625 + 1e-12);
  for (const auto& p : c.points) EXPECT_GT(p.beta2, 0.5625);
  EXPECT_THROW(transition_curve(-1.0, 1.0, 3), Error);
}

TEST(ErgmTest, PsiFullNeverBelowConstantValue) {
  OptimConfig c;
  c.m = 6;
  c.multistart_count = 3;
  for (const auto& p : square_grid(-2.0, 2.0, 3)) {
    const FreeEnergyResult r = psi_full(p, c);
    EXPECT_GE(r.psi, psi_constant(p).psi_er - 1e-9);
    EXPECT_LE(r.maximizer_densities.t, std::pow(r.maximizer_densities.e, 3) + 1e-6);
  }
}

TEST(ErgmTest, SquareGridOrder) {
  const auto g = square_grid(-1.0, 1.0, 3);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_DOUBLE_EQ(g[1].beta1, -1.0);
  EXPECT_DOUBLE_EQ(g[1].beta2, 0.0);
  EXPECT_DOUBLE_EQ(g[3].beta1, 0.0);
}

TEST(ErgmTest, HalfEntropyDerivatives) {
  for (double t : {0.01, 0.05, 0.1, 0.12}) {
    EXPECT_NEAR(half_entropy(t), oracle::half_slice_entropy(t), 1e-15);
    const double h = 1e-5;
    const double fd = (oracle::half_slice_entropy(t + h) - 2 * oracle::half_slice_entropy(t) +
                       oracle::half_slice_entropy(t - h)) /
                      (h * h);
    EXPECT_NEAR(half_entropy_second_derivative(t), fd, 1e-3 * std::max(1.0, std::abs(fd)));
  }
  EXPECT_THROW(half_entropy_second_derivative(0.0), Error);
}

TEST(ErgmTest, ConvexityReport) {
  const ConvexityReport r = convexity_report(500);
  EXPECT_GT(r.c1, 0.0);
  EXPECT_LE(r.c1, r.c2);
  EXPECT_LT(r.c2, 0.125);
  EXPECT_LT(half_entropy_second_derivative(r.c1 * 0.99), 0.0);
  EXPECT_GT(half_entropy_second_derivative(r.c2 * 1.01), 0.0);
  EXPECT_LT(r.max_fd_discrepancy, 1e-6);
  EXPECT_THROW(convexity_report(10), Error);
}

}  // namespace
}  // namespace graphent
