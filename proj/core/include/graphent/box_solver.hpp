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

#pragma once

#include <functional>

#include "graphent/graphon.hpp"

namespace graphent {

/// Objective over symmetric block matrices. Writes the gradient in the
/// library-wide convention (df = (1/m^2) sum G .* dV) and returns the value.
using BoxObjective = std::function<double(const Matrix& values, Matrix& gradient)>;

struct BoxSolverOptions {
  double lower = 0.0;
  double upper = 1.0;
  int max_iterations = 2000;
  double tolerance = 1e-8;  // sup norm of the projected gradient
  int nonmonotone_memory = 10;
};

struct BoxSolverResult {
  Matrix values;
  double objective = 0.0;
  double projected_gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Nonmonotone spectral projected gradient (Barzilai-Borwein steps with
/// Armijo backtracking) in the L^2 metric of step functions. Symmetry is
/// preserved because every step is a combination of symmetric matrices.
BoxSolverResult minimize_on_box(const BoxObjective& objective, Matrix start,
                                const BoxSolverOptions& options);

/// sup |P(V - G) - V| with P the projection onto [lower, upper].
double projected_gradient_norm(const Matrix& values, const Matrix& gradient, double lower,
                               double upper);

}  // namespace graphent
