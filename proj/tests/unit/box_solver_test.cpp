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

#include "graphent/box_solver.hpp"

#include <gtest/gtest.h>

namespace graphent {
namespace {

// sum (V - A)^2 / m^2 with A partly outside the box: the minimizer is A
// clipped to [0, 1].
TEST(BoxSolverTest, ClippedQuadratic) {
  Matrix a(3, 3);
  a << 0.2, 1.4, -0.3, 1.4, 0.5, 0.7, -0.3, 0.7, 0.9;
  auto f = [&](const Matrix& v, Matrix& grad) {
    grad = 2.0 * (v - a);
    return (v - a).squaredNorm() / 9.0;
  };
  BoxSolverOptions options;
  options.tolerance = 1e-12;
  const BoxSolverResult r = minimize_on_box(f, Matrix::Constant(3, 3, 0.5), options);
  EXPECT_TRUE(r.converged);
  const Matrix expected = a.cwiseMax(0.0).cwiseMin(1.0);
  EXPECT_LT((r.values - expected).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_EQ(r.values, r.values.transpose());
}

TEST(BoxSolverTest, ProjectedGradientNorm) {
  const Matrix v = Matrix::Constant(2, 2, 1.0);
  // Gradient pushes upward at the upper bound: no feasible descent.
  EXPECT_DOUBLE_EQ(projected_gradient_norm(v, Matrix::Constant(2, 2, -3.0), 0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(projected_gradient_norm(v, Matrix::Constant(2, 2, 0.25), 0.0, 1.0), 0.25);
}

}  // namespace
}  // namespace graphent
