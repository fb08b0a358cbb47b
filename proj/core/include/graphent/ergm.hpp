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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphent/graphon.hpp"
#include "graphent/optimizer.hpp"

namespace graphent {

// Free energy of the edge/triangle exponential random graph model:
//   psi(b1, b2) = max_g  -I(g) + b1 e(g) + b2 t(g).

struct ErgmParams {
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// -I0(u) + b1 u + b2 u^3: the functional restricted to constant graphons.
double ergm_scalar(const ErgmParams& params, double u);

struct ScalarMaximum {
  double u = 0.0;
  double value = 0.0;
};

/// Every local maximizer of ergm_scalar on (0, 1), ascending in u, located by
/// a 10^4-interval sign scan of the derivative and bisection polish.
std::vector<ScalarMaximum> scalar_local_maxima(const ErgmParams& params);

struct ConstantFreeEnergy {
  double psi_er = 0.0;
  std::vector<double> u_star;  // all maximizers within 1e-8 of the max
};

ConstantFreeEnergy psi_constant(const ErgmParams& params);

struct FreeEnergyResult {
  double psi = 0.0;
  Graphon maximizer;
  DensityPair maximizer_densities;
  bool degenerate = false;
  std::optional<DensityPair> secondary_densities;
  // diagnostics
  bool converged = false;
  double kkt_norm = 0.0;
  int best_start = -1;
  std::vector<double> start_values;
  std::vector<DensityPair> start_densities;
};

/// Box-constrained maximization of Psi over m x m step graphons from the
/// constant maximizers, the configured ansatz family, random restarts and
/// `extra_starts`. Degeneracy is flagged when two starts reach within 1e-7 of
/// the max with densities differing by more than 1e-3.
FreeEnergyResult psi_full(const ErgmParams& params, const OptimConfig& config,
                          const std::vector<Ansatz>& extra_starts = {});

struct TransitionPoint {
  double beta2 = 0.0;
  double beta1_critical = 0.0;
  double u_low = 0.0;
  double u_high = 0.0;
  double psi_gap = 0.0;  // |f(u_high) - f(u_low)| at beta1_critical
};

/// Locates the beta1 at which the constant maximizer jumps, by bisection.
/// Throws kValueOutOfRange for beta2 <= -1/2 and kNoTransitionFound when the
/// jump is below 1e-3 (unique maximizer along the whole beta1 line).
TransitionPoint transition_point(double beta2);

struct TransitionCurve {
  std::vector<TransitionPoint> points;
  std::vector<double> no_transition;  // sampled beta2 values without a jump
};

/// Samples `steps` evenly spaced beta2 values in [beta2_min, beta2_max].
/// Requires beta2_min > -1/2, beta2_min <= beta2_max and steps >= 2.
TransitionCurve transition_curve(double beta2_min, double beta2_max, int steps);

struct ThmFiveRow {
  ErgmParams params;
  double psi = 0.0;
  DensityPair densities;
  bool degenerate = false;
  bool converged = false;
  bool violation = false;  // t > e^3 + 1e-6
  // Final densities reached from the clique warm start (t > e^3 initially).
  DensityPair adversarial_densities;
  bool adversarial_escaped = false;
};

struct ThmFiveReport {
  std::vector<ThmFiveRow> rows;
  int violations = 0;
};

/// Runs psi_full at every grid point (in parallel across points) and checks
/// t(maximizer) <= e(maximizer)^3 + 1e-6. When `adversarial_start` is set,
/// each run also starts from the upper-boundary clique graphon at e = 1/2.
ThmFiveReport verify_t_le_e_cubed(std::span<const ErgmParams> grid, const OptimConfig& config,
                                  bool adversarial_start = true);

/// per_axis x per_axis grid on [lo, hi]^2 in row-major (beta1 outer) order.
std::vector<ErgmParams> square_grid(double lo, double hi, int per_axis);

// s(1/2, t) = -I0(1/2 + (1/8 - t)^{1/3}) and its convexity structure.

double half_entropy(double t);
/// Exact second derivative by the chain rule; 0 < t < 1/8.
double half_entropy_second_derivative(double t);
/// Fourth-order central difference with step 0.01 * min(t, 1/8 - t).
double half_entropy_second_derivative_fd(double t);

struct ConvexityReport {
  double c1 = 0.0;
  double c2 = 0.0;
  std::vector<std::pair<double, double>> second_derivative_samples;  // (t, s'')
  double max_fd_discrepancy = 0.0;  // max |exact - fd| / max(1, |exact|)
};

/// Samples s'' at t_i = i / (8 (samples + 1)), i = 1..samples. Expects one
/// sign change from - to +; the crossing is refined by bisection and gives
/// c1 = c2. Throws kInvalidArgument for samples < 100 and
/// kSignPatternUnexpected for any other pattern.
ConvexityReport convexity_report(int samples);

}  // namespace graphent
