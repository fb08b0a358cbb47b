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

#include "graphent/crease.hpp"

#include <algorithm>
#include <cmath>

#include "graphent/error.hpp"
#include "graphent/region.hpp"

namespace graphent {

namespace {

bool usable(SolveStatus s) { return s != SolveStatus::kInfeasible; }

std::vector<CreasePoint> run_branch(double e, double t_curve, double sign, const Motif& motif,
                                    const std::vector<double>& deltas, const OptimConfig& config,
                                    const EntropyResult& on_curve) {
  const bool triangle = motif == Motif::triangle();
  std::vector<CreasePoint> points;
  std::optional<Graphon> previous;
  for (double delta : deltas) {
    CreasePoint p;
    p.delta = delta;
    p.t = t_curve + sign * delta;
    if (p.t < 0.0 || p.t > 1.0 ||
        (triangle && !region::is_feasible(region::classify(e, p.t, config.constraint_tol)))) {
      p.in_region = false;
      points.push_back(p);
      continue;
    }
    std::vector<Ansatz> warm;
    if (previous) warm.emplace_back(WarmStart{*previous});
    const EntropyResult r = maximize_entropy({e, p.t}, motif, config, warm);
    p.status = r.status;
    p.s_value = r.s_value;
    p.drop = on_curve.s_value - r.s_value;
    p.quotient = p.drop / delta;
    if (usable(r.status)) previous = r.g_star;
    points.push_back(p);
  }
  return points;
}

}  // namespace

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  LinearFit fit;
  const std::size_t n = std::min(x.size(), y.size());
  fit.points = static_cast<int>(n);
  if (n < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - fit.intercept - fit.slope * x[i];
      rss += r * r;
    }
    const double sigma2 = rss / static_cast<double>(n - 2);
    fit.slope_se = std::sqrt(sigma2 / sxx);
    fit.intercept_se = std::sqrt(sigma2 * (1.0 / n + mx * mx / sxx));
  }
  return fit;
}

CreaseScan crease_scan(double e, const Motif& motif, std::span<const double> deltas,
                       const OptimConfig& config) {
  if (!(e > 0.0 && e < 1.0)) throw Error(ErrorCode::kValueOutOfRange, "crease_scan needs 0 < e < 1");
  std::vector<double> sorted(deltas.begin(), deltas.end());
  for (double d : sorted) {
    if (!(d > 0.0)) throw Error(ErrorCode::kInvalidArgument, "scan offsets must be positive");
  }
  std::sort(sorted.begin(), sorted.end());

  CreaseScan scan{.e = e, .motif_edges = motif.edge_count(), .t_curve = std::pow(e, motif.edge_count()),
                  .on_curve = maximize_entropy({e, std::pow(e, motif.edge_count())}, motif, config)};
  scan.left = run_branch(e, scan.t_curve, -1.0, motif, sorted, config, scan.on_curve);
  scan.right = run_branch(e, scan.t_curve, +1.0, motif, sorted, config, scan.on_curve);

  std::vector<double> log_delta, log_drop;
  for (const auto& p : scan.left) {
    if (!p.in_region || !usable(p.status)) continue;
    scan.left_slopes.push_back(p.quotient);
    if (p.drop > 0.0) {
      log_delta.push_back(std::log(p.delta));
      log_drop.push_back(std::log(p.drop));
    }
  }
  for (const auto& p : scan.right) {
    if (p.in_region && usable(p.status)) scan.right_slopes.push_back(p.quotient);
  }
  if (log_delta.size() >= 2) {
    const LinearFit fit = fit_line(log_delta, log_drop);
    scan.left_exponent_fit = {.valid = true,
                              .points = fit.points,
                              .exponent = fit.slope,
                              .exponent_se = fit.slope_se,
                              .constant = std::exp(fit.intercept)};
  }

  if (motif == Motif::triangle()) {
    scan.constants = f_minus(e);
    const auto& c = *scan.constants;
    for (const auto& p : scan.left) {
      if (!p.in_region || !usable(p.status)) continue;
      const double power = c.power_constant * std::pow(p.delta, 2.0 / 3.0);
      const double linear = c.linear_constant_below * p.delta;
      scan.bound_checks.push_back({"below", "power_2_3", p.delta, p.drop, power,
                                   p.drop >= power - kBoundSlack});
      scan.bound_checks.push_back({"below", "linear_below", p.delta, p.drop, linear,
                                   p.drop >= linear - kBoundSlack});
    }
    for (const auto& p : scan.right) {
      if (!p.in_region || !usable(p.status)) continue;
      const double linear = c.linear_constant_above * p.delta;
      scan.bound_checks.push_back({"above", "linear_above", p.delta, p.drop, linear,
                                   p.drop >= linear - kBoundSlack});
    }
  }
  return scan;
}

}  // namespace graphent
