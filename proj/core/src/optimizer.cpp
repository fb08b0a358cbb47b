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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "graphent/box_solver.hpp"
#include "graphent/error.hpp"
#include "graphent/parallel.hpp"
#include "graphent/rate.hpp"
#include "graphent/region.hpp"
#include "starts.hpp"

namespace graphent {

namespace {

constexpr double kPenaltyCap = 1e10;
constexpr double kInfeasibleFactor = 10.0;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Matrix clamp_box(Matrix v) { return v.cwiseMax(kClampEta).cwiseMin(1.0 - kClampEta); }

// Shifts toward mean e and clamps, a few rounds so the clamp does not leave
// the mean far off.
Matrix shift_to_mean(Matrix v, double e) {
  for (int round = 0; round < 8; ++round) {
    v = (v.array() + (e - v.mean())).matrix().cwiseMax(0.0).cwiseMin(1.0);
  }
  return v;
}

Matrix two_block(int m, int split, double p11, double p12, double p22) {
  Matrix v(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const bool a = i < split, b = j < split;
      v(i, j) = a && b ? p11 : (!a && !b ? p22 : p12);
    }
  }
  return v;
}

struct StartOutcome {
  Matrix values;
  double s_value = -std::numeric_limits<double>::infinity();
  double violation = std::numeric_limits<double>::infinity();
  double kkt = std::numeric_limits<double>::infinity();
  double beta1 = 0.0;
  double beta2 = 0.0;
};

StartOutcome solve_from(Matrix start, const DensityPair& target, const Motif& motif,
                        const OptimConfig& config) {
  // Least-squares multipliers at the start point: with zero multipliers the
  // rate term alone pulls every start onto the constant graphon, which is a
  // stationary point of the Lagrangian for any multipliers.
  double lambda_e = 0.0;
  double lambda_t = 0.0;
  start = clamp_box(std::move(start));
  {
    const Matrix h = kernel::motif_gradient(start, motif);
    const Matrix y = kernel::rate_gradient(start);
    const double mean_h = h.mean();
    const double var_h = (h.array() - mean_h).square().mean();
    if (var_h > 1e-14 * (1.0 + mean_h * mean_h)) {
      lambda_t = ((h.array() - mean_h) * (y.array() - y.mean())).mean() / var_h;
    }
    lambda_e = y.mean() - lambda_t * mean_h;
  }
  double rho = config.penalty_initial;
  double previous_violation = std::numeric_limits<double>::infinity();
  int stalled = 0;

  BoxSolverOptions inner;
  inner.lower = kClampEta;
  inner.upper = 1.0 - kClampEta;
  inner.max_iterations = config.max_inner_iterations;

  StartOutcome out;
  Matrix v = std::move(start);
  for (int outer = 0; outer < config.max_outer_iterations; ++outer) {
    inner.tolerance = std::max(0.1 * config.kkt_tol, 1e-2 / std::pow(2.0, outer));
    const double le = lambda_e, lt = lambda_t, r = rho;
    auto lagrangian = [&](const Matrix& x, Matrix& grad) {
      const double ce = kernel::edge_density(x) - target.e;
      const double ct = kernel::motif_density(x, motif) - target.t;
      const Matrix h = kernel::motif_gradient(x, motif);
      grad = kernel::rate_gradient(x);
      grad.array() += (-le + r * ce);
      grad += (-lt + r * ct) * h;
      return kernel::rate_function(x) - le * ce - lt * ct + 0.5 * r * (ce * ce + ct * ct);
    };
    v = minimize_on_box(lagrangian, std::move(v), inner).values;

    const double ce = kernel::edge_density(v) - target.e;
    const double ct = kernel::motif_density(v, motif) - target.t;
    lambda_e -= rho * ce;
    lambda_t -= rho * ct;
    const double violation = std::max(std::abs(ce), std::abs(ct));

    Matrix grad = kernel::rate_gradient(v);
    grad.array() -= lambda_e;
    grad -= lambda_t * kernel::motif_gradient(v, motif);
    const double kkt = projected_gradient_norm(v, grad, inner.lower, inner.upper);

    out.violation = violation;
    out.kkt = kkt;
    if (violation <= config.constraint_tol && kkt <= config.kkt_tol) break;

    if (violation > config.constraint_tol && violation > 0.25 * previous_violation) {
      if (rho >= kPenaltyCap) {
        if (++stalled >= 3) break;
      }
      rho = std::min(rho * config.penalty_growth, kPenaltyCap);
    }
    previous_violation = violation;
  }
  out.s_value = -kernel::rate_function(v);
  out.beta1 = lambda_e;
  out.beta2 = lambda_t;
  out.values = std::move(v);
  return out;
}

}  // namespace

namespace detail {

Matrix random_restart(double e, int m, SplitMix64& rng) {
  const int parts = rng.uniform_int(2, 4);
  std::vector<int> block_of(m);
  for (int i = 0; i < m; ++i) block_of[i] = rng.uniform_int(0, parts - 1);
  Matrix levels(parts, parts);
  for (int a = 0; a < parts; ++a) {
    for (int b = 0; b <= a; ++b) levels(a, b) = levels(b, a) = rng.uniform();
  }
  Matrix v(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double jitter = rng.uniform(-0.05, 0.05);
      v(i, j) = v(j, i) = std::clamp(levels(block_of[i], block_of[j]) + jitter, 0.0, 1.0);
    }
  }
  return shift_to_mean(std::move(v), e);
}

Matrix make_start(const Ansatz& ansatz, const DensityPair& target, const Motif& motif, int m,
                  SplitMix64& rng) {
  const double e = target.e;
  const double on_curve = std::pow(e, motif.edge_count());
  return std::visit(
      Overloaded{
          [&](const ConstantStart&) -> Matrix { return Matrix::Constant(m, m, e); },
          [&](const BipodalRandomStart&) -> Matrix {
            const int split = std::clamp(static_cast<int>(std::lround(rng.uniform(0.2, 0.8) * m)), 1,
                                         std::max(1, m - 1));
            return shift_to_mean(two_block(m, split, rng.uniform(), rng.uniform(), rng.uniform()), e);
          },
          [&](const CheckerboardStart&) -> Matrix {
            const double gap = target.t - on_curve;
            const double size = std::min({std::cbrt(std::abs(gap)), e, 1.0 - e});
            const double sign = gap < 0.0 ? -1.0 : 1.0;
            // Rank-one zero-mean perturbation +-size on a half/half split.
            return two_block(m, m / 2, e + sign * size, e - sign * size, e + sign * size);
          },
          [&](const UpperCornerStart&) -> Matrix {
            const Matrix clique =
                two_block(m, static_cast<int>(std::lround(std::sqrt(e) * m)), 1.0, 0.0, 0.0);
            const Matrix flat = Matrix::Constant(m, m, e);
            auto mix = [&](double w) { return Matrix(w * clique + (1.0 - w) * flat); };
            if (target.t <= on_curve) return mix(0.5);
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 60; ++it) {
              const double mid = 0.5 * (lo + hi);
              (kernel::motif_density(mix(mid), motif) < target.t ? lo : hi) = mid;
            }
            return mix(0.5 * (lo + hi));
          },
          [&](const WarmStart& warm) -> Matrix { return resample(warm.graphon, m).values(); },
      },
      ansatz);
}

}  // namespace detail

std::string_view ansatz_name(const Ansatz& ansatz) {
  return std::visit(Overloaded{
                        [](const ConstantStart&) { return std::string_view("constant"); },
                        [](const BipodalRandomStart&) { return std::string_view("bipodal_random"); },
                        [](const CheckerboardStart&) { return std::string_view("checkerboard"); },
                        [](const UpperCornerStart&) { return std::string_view("upper_corner"); },
                        [](const WarmStart&) { return std::string_view("warm_start"); },
                    },
                    ansatz);
}

void OptimConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (m < 1) fail("m must be >= 1");
  if (multistart_count < 0) fail("multistart_count must be >= 0");
  if (max_outer_iterations < 1 || max_inner_iterations < 1) fail("iteration limits must be >= 1");
  if (!(constraint_tol > 0.0) || !(kkt_tol > 0.0)) fail("tolerances must be positive");
  if (!(penalty_initial > 0.0)) fail("penalty_initial must be positive");
  if (!(penalty_growth > 1.0)) fail("penalty_growth must exceed 1");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kNotConverged: return "not_converged";
    case SolveStatus::kInfeasible: return "infeasible";
  }
  return "unknown";
}

EntropyResult maximize_entropy(const DensityPair& target, const Motif& motif,
                               const OptimConfig& config, const std::vector<Ansatz>& extra_starts) {
  config.validate();
  if (!(target.e >= 0.0 && target.e <= 1.0 && target.t >= 0.0 && target.t <= 1.0)) {
    throw Error(ErrorCode::kValueOutOfRange, "target densities must lie in [0, 1]");
  }
  const int m = config.m;

  std::vector<Ansatz> starts = extra_starts;
  starts.insert(starts.end(), config.ansatz_set.begin(), config.ansatz_set.end());
  const std::size_t seeded = starts.size();
  const std::size_t total = seeded + static_cast<std::size_t>(config.multistart_count);

  const bool triangle = motif == Motif::triangle();
  if (triangle && !region::is_feasible(region::classify(target.e, target.t, config.constraint_tol))) {
    EntropyResult result{.g_star = constant_graphon(target.e, m)};
    result.target = target;
    result.achieved = {target.e, std::pow(target.e, 3)};
    result.s_value = -rate_i0(target.e);
    result.status = SolveStatus::kInfeasible;
    result.constraint_violation = std::abs(result.achieved.t - target.t);
    result.kkt_norm = std::numeric_limits<double>::infinity();
    return result;
  }

  std::vector<StartOutcome> outcomes(total);
  parallel_for(total, config.threads, [&](std::size_t index) {
    SplitMix64 rng = make_stream(config.seed, index);
    Matrix start = index < seeded ? detail::make_start(starts[index], target, motif, m, rng)
                                  : detail::random_restart(target.e, m, rng);
    outcomes[index] = solve_from(std::move(start), target, motif, config);
  });

  // Deterministic reduction in start order.
  int best = -1;
  for (std::size_t i = 0; i < total; ++i) {
    if (outcomes[i].violation > config.constraint_tol) continue;
    if (best < 0 || outcomes[i].s_value > outcomes[best].s_value) best = static_cast<int>(i);
  }
  SolveStatus status = SolveStatus::kConverged;
  if (best < 0) {
    for (std::size_t i = 0; i < total; ++i) {
      if (best < 0 || outcomes[i].violation < outcomes[best].violation) best = static_cast<int>(i);
    }
    status = outcomes[best].violation > kInfeasibleFactor * config.constraint_tol
                 ? SolveStatus::kInfeasible
                 : SolveStatus::kNotConverged;
  } else if (outcomes[best].kkt > config.kkt_tol) {
    status = SolveStatus::kNotConverged;
  }

  const StartOutcome& win = outcomes[best];
  EntropyResult result{.g_star = Graphon::validate(win.values)};
  result.s_value = win.s_value;
  result.target = target;
  result.achieved = {kernel::edge_density(win.values), kernel::motif_density(win.values, motif)};
  result.beta1 = win.beta1;
  result.beta2 = win.beta2;
  result.el_residual_norm = el_residual(result.g_star, win.beta1, win.beta2, motif).sup_norm;
  result.status = status;
  result.converged = status == SolveStatus::kConverged;
  result.constraint_violation = win.violation;
  result.kkt_norm = win.kkt;
  result.best_start = best;
  result.multistart_values.reserve(total);
  for (const auto& o : outcomes) result.multistart_values.push_back(o.s_value);
  return result;
}

// ---------------------------------------------------------------------------

double crease_integrand(double e, double x) {
  const double a = e;
  const double b = 1.0 - e;
  if (std::abs(x) <= 0.1 * std::min(a, b)) {
    // Series f = sum_{n>=2} [ (1/a) (-x/a)^{n-2} + (1/b) (x/b)^{n-2} ] / (2 n (n-1)).
    const double r1 = -x / a;
    const double r2 = x / b;
    double p1 = 1.0 / a, p2 = 1.0 / b, sum = 0.0;
    for (int n = 2; n < 60; ++n) {
      const double term = (p1 + p2) / (2.0 * n * (n - 1));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      p1 *= r1;
      p2 *= r2;
    }
    return sum;
  }
  return (rate_i0(e + x) - x * rate_i0_prime(e) - rate_i0(e)) / (x * x);
}

CreaseBoundConstants f_minus(double e) {
  if (!(e > 0.0 && e < 1.0)) {
    throw Error(ErrorCode::kValueOutOfRange, "f_minus needs 0 < e < 1");
  }
  constexpr int kGrid = 100000;
  const double lo = -e;
  const double hi = 1.0 - e;
  const double h = (hi - lo) / kGrid;
  auto f = [&](double x) { return crease_integrand(e, x); };

  int best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kGrid; ++i) {
    const double value = f(lo + i * h);
    if (value < best_value) {
      best_value = value;
      best = i;
    }
  }
  // Golden-section polish on the bracketing cells.
  double a = lo + std::max(0, best - 1) * h;
  double b = lo + std::min(kGrid, best + 1) * h;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a); fd = f(d);
    }
  }
  double x_star = lo + best * h;
  for (double cand : {a, b, 0.5 * (a + b)}) {
    if (const double v = f(cand); v < best_value) {
      best_value = v;
      x_star = cand;
    }
  }

  CreaseBoundConstants out;
  out.e = e;
  out.f_minus = best_value;
  out.argmin_x = x_star;
  out.linear_constant_below = best_value / e;
  out.linear_constant_above = best_value / (3.0 * e + 1.0);
  out.power_constant = best_value;
  return out;
}

BipodalSolution closed_form_half(double t) {
  if (!(t >= 0.0 && t <= 0.125)) {
    throw Error(ErrorCode::kValueOutOfRange, "closed_form_half needs 0 <= t <= 1/8");
  }
  BipodalSolution out;
  // cbrt(1/8) rounds just below 1/2.
  out.epsilon = t == 0.0 ? 0.5 : std::cbrt(0.125 - t);
  out.c_eigenvalue = -out.epsilon;
  out.s_value = -rate_i0(0.5 + out.epsilon);
  if (out.epsilon == 0.0 || out.epsilon >= 0.5) {
    out.betas_finite = false;
    out.beta1 = std::numeric_limits<double>::infinity();
    out.beta2 = -std::numeric_limits<double>::infinity();
    return out;
  }
  const double eps = out.epsilon;
  out.beta2 = -std::log((0.5 + eps) / (0.5 - eps)) / (6.0 * eps * eps);
  out.beta1 = -0.75 * out.beta2;
  return out;
}

Graphon closed_form_half_graphon(double t, int m) {
  const double eps = closed_form_half(t).epsilon;
  return bipodal_graphon(0.5, 0.5 - eps, 0.5 + eps, 0.5 - eps, m).graphon;
}

UpperBoundarySolution closed_form_upper(double e, int m) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw Error(ErrorCode::kValueOutOfRange, "closed_form_upper needs 0 <= e <= 1");
  }
  auto bip = bipodal_graphon(std::sqrt(e), 1.0, 0.0, 0.0, m);
  UpperBoundarySolution out{.graphon = std::move(bip.graphon)};
  out.split = bip.split;
  out.edge_density = edge_density(out.graphon);
  out.triangle_density = motif_density(out.graphon, Motif::triangle());
  return out;
}

ELResidualField el_residual(const Graphon& g, double beta1, double beta2, const Motif& motif) {
  ELResidualField out;
  out.h_field = motif_gradient(g, motif);
  out.residuals = (-rate_gradient(g)).array() + beta1;
  out.residuals += beta2 * out.h_field;
  out.sup_norm = out.residuals.cwiseAbs().maxCoeff();
  return out;
}

MultiplierFit estimate_multipliers(const Graphon& g, const Motif& motif) {
  const Matrix& v = g.values();
  if (!(v.minCoeff() > kClampEta && v.maxCoeff() < 1.0 - kClampEta)) {
    throw Error(ErrorCode::kValueOutOfRange, "multiplier fit needs interior block values");
  }
  const Matrix h = motif_gradient(g, motif);
  const Matrix y = rate_gradient(g);
  const double n = static_cast<double>(v.size());
  const double mean_h = h.mean();
  const double mean_y = y.mean();
  const double var_h = (h.array() - mean_h).square().sum() / n;
  if (!(var_h > 1e-14 * (1.0 + mean_h * mean_h))) {
    throw Error(ErrorCode::kDegenerateFit, "first-variation field is constant; beta2 unidentifiable");
  }
  const double cov = ((h.array() - mean_h) * (y.array() - mean_y)).sum() / n;
  MultiplierFit fit;
  fit.beta2 = cov / var_h;
  fit.beta1 = mean_y - fit.beta2 * mean_h;
  fit.residual_norm = ((-y).array() + fit.beta1 + fit.beta2 * h.array()).abs().maxCoeff();
  return fit;
}

}  // namespace graphent
