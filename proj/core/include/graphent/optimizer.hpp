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

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "graphent/graphon.hpp"
#include "graphent/motif.hpp"

namespace graphent {

struct DensityPair {
  double e = 0.0;
  double t = 0.0;
};

// Start families for the multistart solver.
struct ConstantStart {};       // g_e
struct BipodalRandomStart {};  // random two-part step graphon
struct CheckerboardStart {};   // c = 1/2 rank-one perturbation of g_e sized to the target
struct UpperCornerStart {};    // mix of g_e and the clique graphon 1[x,y < sqrt(e)]
struct WarmStart {
  Graphon graphon;
};
using Ansatz = std::variant<ConstantStart, BipodalRandomStart, CheckerboardStart, UpperCornerStart,
                            WarmStart>;

std::string_view ansatz_name(const Ansatz& ansatz);

struct OptimConfig {
  int m = 16;
  int multistart_count = 12;
  int max_outer_iterations = 60;
  int max_inner_iterations = 2000;
  double constraint_tol = 1e-6;
  double kkt_tol = 1e-5;
  double penalty_initial = 10.0;
  double penalty_growth = 4.0;
  std::uint64_t seed = 0;
  std::vector<Ansatz> ansatz_set{ConstantStart{}, CheckerboardStart{}, BipodalRandomStart{},
                                 UpperCornerStart{}};
  int threads = 1;

  /// Throws kInvalidArgument on non-positive tolerances, penalty_growth <= 1, m < 1.
  void validate() const;
};

enum class SolveStatus { kConverged, kNotConverged, kInfeasible };
std::string_view to_string(SolveStatus status);

struct EntropyResult {
  Graphon g_star;
  double s_value = 0.0;  // -I(g_star)
  DensityPair target;
  DensityPair achieved;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double el_residual_norm = 0.0;
  bool converged = false;
  std::vector<double> multistart_values;  // per-start -I, in start order
  // diagnostics
  SolveStatus status = SolveStatus::kNotConverged;
  double constraint_violation = 0.0;
  double kkt_norm = 0.0;
  int best_start = -1;
};

/// Maximizes -I(g) subject to e(g) = target.e and t(H, g) = target.t with an
/// augmented Lagrangian over projected-gradient inner solves. Every ansatz in
/// config.ansatz_set plus config.multistart_count random starts is run;
/// `extra_starts` (e.g. continuation warm starts) run first. The best
/// feasible start is reported. Triangle targets outside the region are
/// reported kInfeasible without solving.
EntropyResult maximize_entropy(const DensityPair& target, const Motif& motif,
                               const OptimConfig& config,
                               const std::vector<Ansatz>& extra_starts = {});

// ---------------------------------------------------------------------------
// Crease bound constants

struct CreaseBoundConstants {
  double e = 0.0;
  double f_minus = 0.0;                // inf_x f(e, x)
  double argmin_x = 0.0;               // where the infimum is attained (0 = the x -> 0 limit)
  double linear_constant_below = 0.0;  // f_minus / e
  double linear_constant_above = 0.0;  // f_minus / (3e + 1)
  double power_constant = 0.0;         // f_minus, coefficient of |dt|^{2/3}
};

/// f(e, x) = (I0(e + x) - x I0'(e) - I0(e)) / x^2, with its x -> 0 limit
/// I0''(e)/2 = 1/(4e(1-e)).
double crease_integrand(double e, double x);

/// Infimum of f(e, .) over [-e, 1-e] by a 10^5-point scan plus golden-section
/// polish. Throws kValueOutOfRange unless 0 < e < 1.
CreaseBoundConstants f_minus(double e);

// ---------------------------------------------------------------------------
// Closed forms

struct BipodalSolution {
  double epsilon = 0.0;
  double c_eigenvalue = 0.0;  // -epsilon
  double s_value = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  // False at epsilon in {0, 1/2}: the multipliers diverge and are reported
  // as beta1 = +inf, beta2 = -inf.
  bool betas_finite = true;
};

/// Optimizer on the e = 1/2 slice below the ER curve: the two-block graphon
/// with values 1/2 - eps (diagonal blocks) and 1/2 + eps (off-diagonal),
/// eps = (1/8 - t)^{1/3}. Throws kValueOutOfRange unless 0 <= t <= 1/8.
BipodalSolution closed_form_half(double t);

/// The graphon realizing closed_form_half(t) at resolution m (c = 1/2).
Graphon closed_form_half_graphon(double t, int m);

struct UpperBoundarySolution {
  Graphon graphon;
  double split = 0.0;  // grid-rounded sqrt(e)
  double edge_density = 0.0;
  double triangle_density = 0.0;
};

/// Clique graphon 1[x, y < sqrt(e)], the maximizer on t = e^{3/2}.
UpperBoundarySolution closed_form_upper(double e, int m);

// ---------------------------------------------------------------------------
// Euler-Lagrange diagnostics

struct ELResidualField {
  Matrix residuals;  // -I0'(g) + beta1 + beta2 h
  Matrix h_field;    // first variation of t(H, g)
  double sup_norm = 0.0;
};

ELResidualField el_residual(const Graphon& g, double beta1, double beta2, const Motif& motif);

struct MultiplierFit {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double residual_norm = 0.0;  // sup norm of the fitted residual field
};

/// Least-squares (beta1, beta2) for -I0'(g) + beta1 + beta2 h = 0 over all
/// blocks. Throws kValueOutOfRange if some block is not strictly inside
/// (eta, 1 - eta) and kDegenerateFit if h is constant across blocks.
MultiplierFit estimate_multipliers(const Graphon& g, const Motif& motif);

}  // namespace graphent
