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
#include <string>
#include <vector>

#include "graphent/optimizer.hpp"

namespace graphent {

struct CreasePoint {
  double delta = 0.0;
  double t = 0.0;
  bool in_region = true;  // false when the triangle region rules the point out
  SolveStatus status = SolveStatus::kInfeasible;
  double s_value = 0.0;
  double drop = 0.0;      // s(e, e^k) - s(e, t)
  double quotient = 0.0;  // drop / delta
};

struct LogLogFit {
  bool valid = false;
  int points = 0;
  double exponent = 0.0;  // slope of log(drop) against log(delta)
  double exponent_se = 0.0;
  double constant = 0.0;  // exp(intercept)
};

struct BoundCheck {
  std::string side;   // "below" or "above"
  std::string bound;  // "power_2_3", "linear_below", "linear_above"
  double delta = 0.0;
  double drop = 0.0;
  double required = 0.0;
  bool holds = false;
};

inline constexpr double kBoundSlack = 1e-6;

struct CreaseScan {
  double e = 0.0;
  int motif_edges = 0;
  double t_curve = 0.0;  // e^k
  EntropyResult on_curve;
  std::vector<CreasePoint> left;   // t = e^k - delta, ascending delta
  std::vector<CreasePoint> right;  // t = e^k + delta, ascending delta
  std::vector<double> left_slopes;
  std::vector<double> right_slopes;
  LogLogFit left_exponent_fit;
  std::optional<CreaseBoundConstants> constants;  // triangle motif only
  std::vector<BoundCheck> bound_checks;
};

/// Solves s(e, e^k +- delta) along both branches by warm-started
/// continuation away from the ER curve. Difference quotients, the log-log
/// exponent of the lower branch, and (for triangles) the f_minus lower bounds
/// are computed from the converged points. Requires 0 < e < 1.
CreaseScan crease_scan(double e, const Motif& motif, std::span<const double> deltas,
                       const OptimConfig& config);

/// Ordinary least squares y = a + b x. Standard errors use n - 2 dof.
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_se = 0.0;
  double slope_se = 0.0;
  int points = 0;
};
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace graphent
