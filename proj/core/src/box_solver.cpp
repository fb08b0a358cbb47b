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

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace graphent {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kStepMin = 1e-12;
constexpr double kStepMax = 1e12;
constexpr int kMaxBacktracks = 60;

Matrix project(const Matrix& v, double lower, double upper) {
  return v.cwiseMax(lower).cwiseMin(upper);
}

double l2_inner(const Matrix& a, const Matrix& b) {
  return a.cwiseProduct(b).sum() / static_cast<double>(a.size());
}

}  // namespace

double projected_gradient_norm(const Matrix& values, const Matrix& gradient, double lower,
                               double upper) {
  return (project(values - gradient, lower, upper) - values).cwiseAbs().maxCoeff();
}

BoxSolverResult minimize_on_box(const BoxObjective& objective, Matrix start,
                                const BoxSolverOptions& options) {
  BoxSolverResult result;
  Matrix x = project(start, options.lower, options.upper);
  Matrix grad(x.rows(), x.cols());
  double fx = objective(x, grad);

  std::deque<double> history{fx};
  double pg = projected_gradient_norm(x, grad, options.lower, options.upper);
  double step = pg > 0.0 ? std::clamp(1.0 / pg, kStepMin, kStepMax) : 1.0;

  Matrix trial_grad(x.rows(), x.cols());
  int iter = 0;
  for (; iter < options.max_iterations && pg > options.tolerance; ++iter) {
    const Matrix direction = project(x - step * grad, options.lower, options.upper) - x;
    const double slope = l2_inner(grad, direction);
    const double reference = *std::max_element(history.begin(), history.end());

    double lambda = 1.0;
    Matrix trial = x + direction;
    double f_trial = objective(trial, trial_grad);
    int backtracks = 0;
    while (!(f_trial <= reference + kArmijo * lambda * slope) && backtracks < kMaxBacktracks) {
      // Safeguarded quadratic interpolation along the segment.
      const double denom = 2.0 * (f_trial - fx - lambda * slope);
      double next = denom > 0.0 ? -slope * lambda * lambda / denom : 0.5 * lambda;
      lambda = std::clamp(next, 0.1 * lambda, 0.5 * lambda);
      trial = x + lambda * direction;
      f_trial = objective(trial, trial_grad);
      ++backtracks;
    }
    if (backtracks == kMaxBacktracks && !(f_trial <= fx)) break;  // no descent possible

    const Matrix s = trial - x;
    const Matrix y = trial_grad - grad;
    const double sy = l2_inner(s, y);
    const double ss = l2_inner(s, s);
    step = sy > 0.0 ? std::clamp(ss / sy, kStepMin, kStepMax) : kStepMax;

    x = std::move(trial);
    grad = trial_grad;
    fx = f_trial;
    history.push_back(fx);
    if (static_cast<int>(history.size()) > options.nonmonotone_memory) history.pop_front();
    pg = projected_gradient_norm(x, grad, options.lower, options.upper);
    if (ss == 0.0) break;
  }

  result.values = std::move(x);
  result.objective = fx;
  result.projected_gradient_norm = pg;
  result.iterations = iter;
  result.converged = pg <= options.tolerance;
  return result;
}

}  // namespace graphent
