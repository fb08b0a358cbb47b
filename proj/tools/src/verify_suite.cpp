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

#include "verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "graphent/census.hpp"
#include "graphent/ergm.hpp"
#include "graphent/graphon.hpp"
#include "graphent/optimizer.hpp"
#include "graphent/parallel.hpp"
#include "graphent/random.hpp"
#include "graphent/region.hpp"
#include "graphent/spectral.hpp"

namespace graphent::cli {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Matrix random_symmetric(SplitMix64& rng, int m, double lo, double hi) {
  Matrix v(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) v(i, j) = v(j, i) = rng.uniform(lo, hi);
  }
  return v;
}

CheckResult trace_inequality(SplitMix64& rng) {
  double worst = 0.0;
  bool ok = true;
  for (int k = 0; k < 200; ++k) {
    const TraceInequality r = verify_trace_inequality(random_symmetric(rng, rng.uniform_int(1, 16), -1.0, 1.0));
    ok = ok && r.holds;
    worst = std::max(worst, r.lhs - r.rhs);
  }
  return {"trace_inequality", ok, "max(lhs - rhs) = " + sci(worst)};
}

CheckResult delta_t(SplitMix64& rng) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Graphon g = Graphon::validate(random_symmetric(rng, rng.uniform_int(2, 16), 0.0, 1.0));
    const double e = edge_density(g);
    const SpectralReport r = delta_t_decomposition(g, e);
    worst = std::max(worst, std::abs(r.delta_t - (motif_density(g, Motif::triangle()) - e * e * e)));
  }
  return {"delta_t_decomposition", worst <= 1e-9, "max error = " + sci(worst)};
}

CheckResult gradient(SplitMix64& rng, const Motif& motif) {
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int m = rng.uniform_int(2, 8);
    Matrix v = random_symmetric(rng, m, 0.05, 0.95);
    const Matrix grad = kernel::motif_gradient(v, motif);
    const int i = rng.uniform_int(0, m - 1);
    const int j = rng.uniform_int(0, m - 1);
    const double h = 1e-5;
    Matrix plus = v, minus = v;
    plus(i, j) += h;
    minus(i, j) -= h;
    if (i != j) {
      plus(j, i) += h;
      minus(j, i) -= h;
    }
    const double fd = (kernel::motif_density(plus, motif) - kernel::motif_density(minus, motif)) / (2 * h);
    const double analytic = (i == j ? 1.0 : 2.0) * grad(i, j) / (m * m);
    worst = std::max(worst, std::abs(fd - analytic) / std::max(1e-3, std::abs(analytic)));
  }
  return {"gradient_" + motif.name(), worst <= 1e-6, "max relative error = " + sci(worst)};
}

CheckResult closed_form_el() {
  double worst = 0.0;
  double fit = 0.0;
  for (double eps : {0.05, 0.1, 0.2, 0.4}) {
    const double t = 0.125 - eps * eps * eps;
    const BipodalSolution s = closed_form_half(t);
    const Graphon g = closed_form_half_graphon(t, 16);
    worst = std::max(worst, el_residual(g, s.beta1, s.beta2, Motif::triangle()).sup_norm);
    const MultiplierFit f = estimate_multipliers(g, Motif::triangle());
    fit = std::max({fit, std::abs(f.beta1 - s.beta1), std::abs(f.beta2 - s.beta2)});
  }
  return {"closed_form_euler_lagrange", worst <= 1e-10 && fit <= 1e-6,
          "residual = " + sci(worst) + ", multiplier error = " + sci(fit)};
}

CheckResult convexity() {
  try {
    const ConvexityReport r = convexity_report(1000);
    const bool ok = r.c1 > 0 && r.c1 <= r.c2 && r.c2 < 0.125 && r.max_fd_discrepancy <= 1e-6;
    return {"convexity_change", ok, "c = " + sci(r.c1) + ", fd discrepancy = " + sci(r.max_fd_discrepancy)};
  } catch (const std::exception& ex) {
    return {"convexity_change", false, ex.what()};
  }
}

CheckResult star_jensen(SplitMix64& rng) {
  double worst = 0.0;
  const Motif star = Motif::star(4);
  for (int k = 0; k < 100; ++k) {
    const Graphon g = Graphon::validate(random_symmetric(rng, rng.uniform_int(1, 12), 0.0, 1.0));
    worst = std::max(worst, std::pow(edge_density(g), 4) - motif_density(g, star));
  }
  return {"star_jensen", worst <= 1e-12, "max(e^4 - t) = " + sci(worst)};
}

CheckResult er_curve(SplitMix64& rng) {
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double a = rng.uniform();
    const Graphon g = constant_graphon(a, rng.uniform_int(1, 10));
    worst = std::max(worst, std::abs(motif_density(g, Motif::triangle()) - a * a * a));
    worst = std::max(worst, std::abs(-rate_function(g) - ergm_scalar({0.0, 0.0}, a)));
    if (region::classify(a, a * a * a, 1e-12) != region::Position::kOnEr && a > 0.0 && a < 1.0) worst = 1.0;
  }
  return {"er_curve_constants", worst <= 1e-12, "max error = " + sci(worst)};
}

CheckResult census_invariants() {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const CensusTable c = enumerate_census(n);
    ok = ok && c.total() == (std::uint64_t{1} << c.max_edges());
    ok = ok && c.count(0, 0) == 1 && c.count(c.max_edges(), c.max_triangles()) == 1;
    std::uint64_t binom = 1;
    for (int k = 0; k <= c.max_edges(); ++k) {
      ok = ok && c.row_total(k) == binom;
      binom = binom * (c.max_edges() - k) / (k + 1);
    }
  }
  return {"census_invariants", ok, "n = 1..6"};
}

}  // namespace

std::vector<CheckResult> run_verify_suite(std::uint64_t seed, int threads) {
  std::vector<std::function<CheckResult(SplitMix64&)>> checks{
      [](SplitMix64& r) { return trace_inequality(r); },
      [](SplitMix64& r) { return delta_t(r); },
      [](SplitMix64& r) { return gradient(r, Motif::triangle()); },
      [](SplitMix64& r) { return gradient(r, Motif::star(4)); },
      [](SplitMix64&) { return closed_form_el(); },
      [](SplitMix64&) { return convexity(); },
      [](SplitMix64& r) { return star_jensen(r); },
      [](SplitMix64& r) { return er_curve(r); },
      [](SplitMix64&) { return census_invariants(); },
  };
  std::vector<CheckResult> results(checks.size());
  parallel_for(checks.size(), threads, [&](std::size_t i) {
    SplitMix64 rng = make_stream(seed, i);
    try {
      results[i] = checks[i](rng);
    } catch (const std::exception& ex) {
      results[i] = {"check_" + std::to_string(i), false, ex.what()};
    }
  });
  return results;
}

}  // namespace graphent::cli
