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

#include "graphent/optimizer.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

OptimConfig small_config() {
  OptimConfig c;
  c.m = 8;
  c.multistart_count = 4;
  return c;
}

TEST(OptimizerTest, ConfigValidation) {
  OptimConfig c;
  EXPECT_NO_THROW(c.validate());
  c.m = 0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.penalty_growth = 1.0;
  EXPECT_THROW(c.validate(), Error);
  c = {};
  c.kkt_tol = 0.0;
  EXPECT_THROW(c.validate(), Error);
}

TEST(OptimizerTest, ErCurvePointIsConstant) {
  const EntropyResult r = maximize_entropy({0.6, 0.216}, Motif::triangle(), small_config());
  EXPECT_EQ(r.status, SolveStatus::kConverged);
  EXPECT_NEAR(r.s_value, -oracle::i0(0.6), 1e-8);
  EXPECT_LT((r.g_star.values().array() - 0.6).abs().maxCoeff(), 1e-4);
}

TEST(OptimizerTest, HalfSliceMatchesClosedForm) {
  for (double t : {0.05, 0.11}) {
    const EntropyResult r = maximize_entropy({0.5, t}, Motif::triangle(), small_config());
    EXPECT_EQ(r.status, SolveStatus::kConverged) << t;
    EXPECT_NEAR(r.s_value, oracle::half_slice_entropy(t), 1e-6) << t;
    const auto [b1, b2] = oracle::half_slice_betas(std::cbrt(0.125 - t));
    EXPECT_NEAR(r.beta1, b1, 1e-3 * std::abs(b1));
    EXPECT_NEAR(r.beta2, b2, 1e-3 * std::abs(b2));
    EXPECT_NEAR(r.achieved.t, t, 1e-6);
  }
}

TEST(OptimizerTest, InfeasibleTargets) {
  const OptimConfig c = small_config();
  EXPECT_EQ(maximize_entropy({0.5, 0.4}, Motif::triangle(), c).status, SolveStatus::kInfeasible);
  EXPECT_EQ(maximize_entropy({0.5, 0.05}, Motif::star(4), c).status, SolveStatus::kInfeasible);
  EXPECT_THROW(maximize_entropy({1.5, 0.1}, Motif::triangle(), c), Error);
}

TEST(OptimizerTest, DeterministicAcrossThreads) {
  OptimConfig c = small_config();
  const EntropyResult a = maximize_entropy({0.4, 0.05}, Motif::triangle(), c);
  c.threads = 3;
  const EntropyResult b = maximize_entropy({0.4, 0.05}, Motif::triangle(), c);
  EXPECT_EQ(a.s_value, b.s_value);
  EXPECT_EQ(a.multistart_values, b.multistart_values);
  EXPECT_EQ(a.g_star, b.g_star);
}

TEST(OptimizerTest, CreaseIntegrand) {
  // Limit at x -> 0 is 1 / (4 e (1 - e)).
  EXPECT_NEAR(crease_integrand(0.3, 0.0), 1.0 / (4 * 0.3 * 0.7), 1e-12);
  EXPECT_NEAR(crease_integrand(0.3, 1e-9), 1.0 / (4 * 0.3 * 0.7), 1e-7);
  const double x = 0.2, e = 0.3;
  const double direct = (oracle::i0(e + x) - x * oracle::i0_prime(e) - oracle::i0(e)) / (x * x);
  EXPECT_NEAR(crease_integrand(e, x), direct, 1e-12);
}

TEST(OptimizerTest, FMinusAtHalfIsOne) {
  const CreaseBoundConstants c = f_minus(0.5);
  EXPECT_NEAR(c.f_minus, 1.0, 1e-9);
  EXPECT_NEAR(c.linear_constant_below, 2.0, 1e-8);
  EXPECT_NEAR(c.linear_constant_above, 0.4, 1e-9);
  // f_minus is the infimum: no sampled value lies below it.
  for (double e : {0.2, 0.7}) {
    const CreaseBoundConstants ce = f_minus(e);
    for (int i = 1; i < 200; ++i) {
      const double x = -e + (1.0) * i / 200.0;
      if (x <= -e || x >= 1 - e) continue;
      EXPECT_GE(crease_integrand(e, x), ce.f_minus - 1e-9);
    }
  }
  EXPECT_THROW(f_minus(1.0), Error);
}

TEST(OptimizerTest, ClosedFormHalf) {
  const BipodalSolution s = closed_form_half(0.124);
  EXPECT_NEAR(s.epsilon, 0.1, 1e-12);
  EXPECT_NEAR(s.s_value, -oracle::i0(0.6), 1e-15);
  EXPECT_NEAR(s.s_value, 0.33651, 1e-5);
  EXPECT_NEAR(s.beta2, -std::log(1.5) / 0.06, 1e-12);
  EXPECT_NEAR(s.beta1, 0.75 * std::log(1.5) / 0.06, 1e-12);
  EXPECT_FALSE(closed_form_half(0.125).betas_finite);
  EXPECT_FALSE(closed_form_half(0.0).betas_finite);
  EXPECT_THROW(closed_form_half(0.2), Error);
  const Graphon g = closed_form_half_graphon(0.1, 8);
  EXPECT_NEAR(oracle::edge_density(g.values()), 0.5, 1e-15);
  EXPECT_NEAR(oracle::triangle_density(g.values()), 0.1, 1e-14);
}

TEST(OptimizerTest, ClosedFormUpper) {
  const UpperBoundarySolution u = closed_form_upper(0.25, 8);
  EXPECT_DOUBLE_EQ(u.split, 0.5);
  EXPECT_NEAR(u.edge_density, 0.25, 1e-15);
  EXPECT_NEAR(u.triangle_density, 0.125, 1e-15);
}

TEST(OptimizerTest, EulerLagrangeResidualAndMultiplierFit) {
  for (double eps : {0.05, 0.2}) {
    const double t = 0.125 - eps * eps * eps;
    const auto [b1, b2] = oracle::half_slice_betas(eps);
    const Graphon g = closed_form_half_graphon(t, 4);
    EXPECT_LT(el_residual(g, b1, b2, Motif::triangle()).sup_norm, 1e-10);
    const MultiplierFit fit = estimate_multipliers(g, Motif::triangle());
    EXPECT_NEAR(fit.beta1, b1, 1e-8);
    EXPECT_NEAR(fit.beta2, b2, 1e-8);
  }
  EXPECT_THROW(estimate_multipliers(constant_graphon(0.5, 4), Motif::triangle()), Error);
  EXPECT_THROW(estimate_multipliers(constant_graphon(1.0, 4), Motif::triangle()), Error);
}

TEST(OptimizerTest, AnsatzNames) {
  EXPECT_EQ(ansatz_name(Ansatz{ConstantStart{}}), "constant");
  EXPECT_EQ(ansatz_name(Ansatz{UpperCornerStart{}}), "upper_corner");
  EXPECT_EQ(to_string(SolveStatus::kNotConverged), "not_converged");
}

}  // namespace
}  // namespace graphent
