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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "graphent/box_solver.hpp"
#include "graphent/error.hpp"
#include "graphent/parallel.hpp"
#include "graphent/rate.hpp"
#include "starts.hpp"

namespace graphent {

namespace {

constexpr int kScalarGrid = 10000;
constexpr double kTieTol = 1e-8;
constexpr double kDegenerateValueTol = 1e-7;
constexpr double kDegenerateDensityTol = 1e-3;
constexpr double kJumpThreshold = 1e-3;
constexpr double kThmFiveSlack = 1e-6;

double scalar_slope(const ErgmParams& p, double u) {
  return p.beta1 + 3.0 * p.beta2 * u * u - 0.5 * (std::log(u) - std::log1p(-u));
}

// Root of the slope in (lo, hi) with slope(lo) > 0 >= slope(hi).
double polish_maximum(const ErgmParams& p, double lo, double hi) {
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (scalar_slope(p, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double ergm_scalar(const ErgmParams& params, double u) {
  return -rate_i0(u) + params.beta1 * u + params.beta2 * u * u * u;
}

std::vector<ScalarMaximum> scalar_local_maxima(const ErgmParams& params) {
  if (!std::isfinite(params.beta1) || !std::isfinite(params.beta2)) {
    throw Error(ErrorCode::kInvalidArgument, "ERGM parameters must be finite");
  }
  // The slope is +inf at 0 and -inf at 1, so every maximizer is interior and
  // sits where the slope changes sign from + to -.
  std::vector<ScalarMaximum> out;
  double previous_u = 0.0;
  bool previous_positive = true;
  for (int i = 1; i <= kScalarGrid; ++i) {
    const double u = static_cast<double>(i) / kScalarGrid;
    const bool positive = i < kScalarGrid ? scalar_slope(params, u) > 0.0 : false;
    if (previous_positive && !positive) {
      const double root = polish_maximum(params, previous_u, u);
      out.push_back({root, ergm_scalar(params, root)});
    }
    previous_u = u;
    previous_positive = positive;
  }
  return out;
}

ConstantFreeEnergy psi_constant(const ErgmParams& params) {
  const auto maxima = scalar_local_maxima(params);
  ConstantFreeEnergy out;
  out.psi_er = -std::numeric_limits<double>::infinity();
  for (const auto& mx : maxima) out.psi_er = std::max(out.psi_er, mx.value);
  for (const auto& mx : maxima) {
    if (mx.value >= out.psi_er - kTieTol) out.u_star.push_back(mx.u);
  }
  return out;
}

FreeEnergyResult psi_full(const ErgmParams& params, const OptimConfig& config,
                          const std::vector<Ansatz>& extra_starts) {
  config.validate();
  const int m = config.m;
  const auto constant = psi_constant(params);
  const double u0 = constant.u_star.front();
  const Motif triangle = Motif::triangle();

  std::vector<Matrix> starts;
  std::vector<SplitMix64> streams;
  std::size_t stream = 0;
  auto add = [&](Matrix v) { starts.push_back(std::move(v)); };
  for (const Ansatz& a : extra_starts) {
    SplitMix64 rng = make_stream(config.seed, stream++);
    add(detail::make_start(a, {u0, u0 * u0 * u0}, triangle, m, rng));
  }
  for (double u : constant.u_star) add(Matrix::Constant(m, m, u));
  for (const Ansatz& a : config.ansatz_set) {
    SplitMix64 rng = make_stream(config.seed, stream++);
    // Shape-aware starts aim at the clique side of the ER curve, away from
    // the constant maximizer.
    const double t_shape = std::pow(u0, 1.5);
    add(detail::make_start(a, {u0, t_shape}, triangle, m, rng));
  }
  for (int r = 0; r < config.multistart_count; ++r) {
    SplitMix64 rng = make_stream(config.seed, stream++);
    const double e = rng.uniform(0.05, 0.95);
    add(detail::random_restart(e, m, rng));
  }

  BoxSolverOptions options;
  options.lower = kClampEta;
  options.upper = 1.0 - kClampEta;
  options.tolerance = 0.1 * config.kkt_tol;
  options.max_iterations = config.max_inner_iterations * config.max_outer_iterations;

  auto negative_psi = [&](const Matrix& x, Matrix& grad) {
    grad = kernel::rate_gradient(x);
    grad.array() -= params.beta1;
    grad -= params.beta2 * kernel::motif_gradient(x, triangle);
    return kernel::rate_function(x) - params.beta1 * kernel::edge_density(x) -
           params.beta2 * kernel::motif_density(x, triangle);
  };

  std::vector<BoxSolverResult> runs(starts.size());
  parallel_for(starts.size(), config.threads, [&](std::size_t i) {
    runs[i] = minimize_on_box(negative_psi, starts[i], options);
  });

  FreeEnergyResult result{.maximizer = Graphon::validate(runs.front().values)};
  int best = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    result.start_values.push_back(-runs[i].objective);
    result.start_densities.push_back(
        {kernel::edge_density(runs[i].values), kernel::motif_density(runs[i].values, triangle)});
    if (-runs[i].objective > -runs[best].objective) best = static_cast<int>(i);
  }
  result.best_start = best;
  result.psi = -runs[best].objective;
  result.maximizer = Graphon::validate(runs[best].values);
  result.maximizer_densities = result.start_densities[best];
  result.kkt_norm = runs[best].projected_gradient_norm;
  result.converged = result.kkt_norm <= config.kkt_tol;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (result.start_values[i] < result.psi - kDegenerateValueTol) continue;
    const auto& d = result.start_densities[i];
    if (std::abs(d.e - result.maximizer_densities.e) > kDegenerateDensityTol ||
        std::abs(d.t - result.maximizer_densities.t) > kDegenerateDensityTol) {
      result.degenerate = true;
      result.secondary_densities = d;
      break;
    }
  }
  return result;
}

TransitionPoint transition_point(double beta2) {
  if (!(beta2 > -0.5)) {
    throw Error(ErrorCode::kValueOutOfRange, "transition search needs beta2 > -1/2");
  }
  // Any tied pair straddles the convex stretch of the scalar function, which
  // always contains u = 2/3; the jump is where the best maximizer crosses it.
  constexpr double kPivot = 2.0 / 3.0;
  auto branch_values = [&](double b1) {
    double low = -std::numeric_limits<double>::infinity();
    double high = -std::numeric_limits<double>::infinity();
    for (const auto& mx : scalar_local_maxima({b1, beta2})) {
      double& slot = mx.u < kPivot ? low : high;
      slot = std::max(slot, mx.value);
    }
    return std::pair{low, high};
  };
  auto high_branch = [&](double b1) {
    const auto [low, high] = branch_values(b1);
    return high > low;
  };
  double lo = -50.0 - 3.0 * std::abs(beta2);
  double hi = 50.0 + 3.0 * std::abs(beta2);
  if (high_branch(lo) || !high_branch(hi)) {
    throw Error(ErrorCode::kNoTransitionFound, "beta1 bracket does not straddle the pivot");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (high_branch(mid) ? hi : lo) = mid;
  }
  TransitionPoint p;
  p.beta2 = beta2;
  p.beta1_critical = 0.5 * (lo + hi);
  p.u_low = scalar_local_maxima({lo, beta2}).front().u;
  p.u_high = scalar_local_maxima({hi, beta2}).back().u;
  if (!(p.u_high - p.u_low > kJumpThreshold)) {
    throw Error(ErrorCode::kNoTransitionFound,
                "maximizer is continuous in beta1 at beta2 = " + std::to_string(beta2));
  }
  const auto [low_value, high_value] = branch_values(p.beta1_critical);
  p.psi_gap = std::abs(high_value - low_value);
  return p;
}

TransitionCurve transition_curve(double beta2_min, double beta2_max, int steps) {
  if (!(beta2_min > -0.5)) throw Error(ErrorCode::kValueOutOfRange, "beta2 range must lie above -1/2");
  if (!(beta2_max >= beta2_min)) throw Error(ErrorCode::kInvalidArgument, "empty beta2 range");
  if (steps < 2) throw Error(ErrorCode::kInvalidArgument, "steps must be >= 2");
  TransitionCurve curve;
  for (int i = 0; i < steps; ++i) {
    const double b2 = beta2_min + (beta2_max - beta2_min) * i / (steps - 1);
    try {
      curve.points.push_back(transition_point(b2));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kNoTransitionFound) throw;
      curve.no_transition.push_back(b2);
    }
  }
  return curve;
}

std::vector<ErgmParams> square_grid(double lo, double hi, int per_axis) {
  if (per_axis < 2) throw Error(ErrorCode::kInvalidArgument, "grid needs >= 2 points per axis");
  std::vector<ErgmParams> grid;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      grid.push_back({lo + (hi - lo) * i / (per_axis - 1), lo + (hi - lo) * j / (per_axis - 1)});
    }
  }
  return grid;
}

ThmFiveReport verify_t_le_e_cubed(std::span<const ErgmParams> grid, const OptimConfig& config,
                                  bool adversarial_start) {
  OptimConfig inner = config;
  inner.threads = 1;
  std::vector<Ansatz> extra;
  if (adversarial_start) extra.emplace_back(WarmStart{closed_form_upper(0.5, config.m).graphon});

  ThmFiveReport report;
  report.rows.resize(grid.size());
  parallel_for(grid.size(), config.threads, [&](std::size_t i) {
    const FreeEnergyResult r = psi_full(grid[i], inner, extra);
    ThmFiveRow& row = report.rows[i];
    row.params = grid[i];
    row.psi = r.psi;
    row.densities = r.maximizer_densities;
    row.degenerate = r.degenerate;
    row.converged = r.converged;
    const double e = row.densities.e;
    row.violation = row.densities.t > e * e * e + kThmFiveSlack;
    if (adversarial_start) {
      row.adversarial_densities = r.start_densities.front();
      const double ea = row.adversarial_densities.e;
      row.adversarial_escaped = row.adversarial_densities.t <= ea * ea * ea + kThmFiveSlack;
    }
  });
  for (const auto& row : report.rows) report.violations += row.violation ? 1 : 0;
  return report;
}

double half_entropy(double t) {
  if (!(t >= 0.0 && t <= 0.125)) throw Error(ErrorCode::kValueOutOfRange, "half_entropy needs 0 <= t <= 1/8");
  return -rate_i0(0.5 + std::cbrt(0.125 - t));
}

double half_entropy_second_derivative(double t) {
  if (!(t > 0.0 && t < 0.125)) throw Error(ErrorCode::kValueOutOfRange, "needs 0 < t < 1/8");
  const double eps = std::cbrt(0.125 - t);
  const double u = 0.5 + eps;
  const double d_eps = -1.0 / (3.0 * eps * eps);
  const double dd_eps = -2.0 / (9.0 * std::pow(eps, 5));
  return -rate_i0_second(u) * d_eps * d_eps - rate_i0_prime(u) * dd_eps;
}

double half_entropy_second_derivative_fd(double t) {
  if (!(t > 0.0 && t < 0.125)) throw Error(ErrorCode::kValueOutOfRange, "needs 0 < t < 1/8");
  const double h = 0.01 * std::min(t, 0.125 - t);
  return (-half_entropy(t + 2 * h) + 16.0 * half_entropy(t + h) - 30.0 * half_entropy(t) +
          16.0 * half_entropy(t - h) - half_entropy(t - 2 * h)) /
         (12.0 * h * h);
}

ConvexityReport convexity_report(int samples) {
  if (samples < 100) throw Error(ErrorCode::kInvalidArgument, "convexity_report needs >= 100 samples");
  ConvexityReport report;
  int changes = 0;
  int last_negative = -1;
  for (int i = 1; i <= samples; ++i) {
    const double t = 0.125 * i / (samples + 1);
    const double exact = half_entropy_second_derivative(t);
    const double fd = half_entropy_second_derivative_fd(t);
    report.max_fd_discrepancy =
        std::max(report.max_fd_discrepancy, std::abs(exact - fd) / std::max(1.0, std::abs(exact)));
    if (!report.second_derivative_samples.empty() &&
        (report.second_derivative_samples.back().second < 0.0) != (exact < 0.0)) {
      ++changes;
    }
    if (exact < 0.0) last_negative = i - 1;
    report.second_derivative_samples.emplace_back(t, exact);
  }
  const auto& s = report.second_derivative_samples;
  if (!(s.front().second < 0.0) || !(s.back().second > 0.0) || changes != 1) {
    throw Error(ErrorCode::kSignPatternUnexpected,
                "expected s'' < 0 near 0 and s'' > 0 near 1/8 with one sign change, saw " +
                    std::to_string(changes) + " changes");
  }
  double lo = s[last_negative].first;
  double hi = s[last_negative + 1].first;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (half_entropy_second_derivative(mid) < 0.0 ? lo : hi) = mid;
  }
  report.c1 = lo;
  report.c2 = hi;
  return report;
}

}  // namespace graphent
