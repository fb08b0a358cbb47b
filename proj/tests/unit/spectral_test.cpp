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

#include "graphent/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"
#include "graphent/random.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

TEST(SpectralTest, TracesMatchPlainSums) {
  SplitMix64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix dg = oracle::random_symmetric(rng, rng.uniform_int(1, 10), -1.0, 1.0);
    EXPECT_NEAR(trace_power(dg, 2), oracle::trace2(dg), 1e-13);
    EXPECT_NEAR(trace_power(dg, 3), oracle::trace3(dg), 1e-13);
  }
  EXPECT_THROW(trace_power(Matrix::Identity(2, 2), 4), Error);
}

TEST(SpectralTest, SpectrumSortedByMagnitude) {
  Matrix dg(2, 2);
  dg << 0.0, 2.0, 2.0, 0.0;  // eigenvalues of dg / 2: +-1
  const auto mu = kernel_operator_spectrum(dg);
  ASSERT_EQ(mu.size(), 2u);
  EXPECT_NEAR(std::abs(mu[0]), 1.0, 1e-14);
  EXPECT_NEAR(std::abs(mu[1]), 1.0, 1e-14);
  Matrix asym = dg;
  asym(0, 1) = 1.0;
  EXPECT_THROW(kernel_operator_spectrum(asym), Error);
}

TEST(SpectralTest, RankOneIsTight) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = rng.uniform_int(1, 12);
    Eigen::VectorXd u(m);
    for (int i = 0; i < m; ++i) u(i) = rng.uniform(-1.0, 1.0);
    const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
    const TraceInequality r = verify_trace_inequality(sign * u * u.transpose());
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.rank_one);
    EXPECT_LT(std::abs(r.gap), 1e-10);
  }
}

TEST(SpectralTest, GapIsPositiveAwayFromRankOne) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const TraceInequality r = verify_trace_inequality(oracle::random_symmetric(rng, rng.uniform_int(2, 12), -1, 1));
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.rank_one);
    EXPECT_GT(r.gap, 1e-10);
  }
}

TEST(SpectralTest, DeltaTDecomposition) {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix v = oracle::random_symmetric(rng, rng.uniform_int(1, 8), 0.0, 1.0);
    const Graphon g = Graphon::validate(v);
    const double e = v.mean();
    const SpectralReport r = delta_t_decomposition(g, e);
    EXPECT_NEAR(r.delta_t, oracle::triangle_density(v) - e * e * e, 1e-12);
    EXPECT_NEAR(r.delta_t, r.quad_term + r.trace3, 1e-15);
  }
  EXPECT_THROW(delta_t_decomposition(constant_graphon(0.5, 2), 0.4), Error);
}

TEST(SpectralTest, NumericalRank) {
  EXPECT_EQ(numerical_rank({1.0, 1e-12, 0.0}), 1);
  EXPECT_EQ(numerical_rank({0.5, -0.25}), 2);
  EXPECT_EQ(numerical_rank({}), 0);
}

}  // namespace
}  // namespace graphent
