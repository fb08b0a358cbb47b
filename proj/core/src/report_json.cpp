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

#include "graphent/report_json.hpp"

#include <cmath>
#include <set>
#include <string>

#include "graphent/error.hpp"

namespace graphent {

using nlohmann::json;

namespace {

json reals(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(json_real(x));
  return out;
}

}  // namespace

json json_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json to_json(const Motif& motif) {
  json edges = json::array();
  for (const auto& [a, b] : motif.edges()) edges.push_back({a + 1, b + 1});
  return {{"name", motif.name()}, {"ell", motif.vertex_count()}, {"edges", edges}};
}

Motif motif_from_json(const json& j) {
  if (j.is_string()) return Motif::from_shorthand(j.get<std::string>());
  if (!j.is_object()) throw Error(ErrorCode::kInvalidMotif, "motif must be a string or an object");
  try {
    const int ell = j.at("ell").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
    return Motif::make(ell, edges, j.value("name", ""));
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kInvalidMotif, std::string("bad motif object: ") + ex.what());
  }
}

json to_json(const OptimConfig& c) {
  json ansatz = json::array();
  for (const auto& a : c.ansatz_set) ansatz.push_back(std::string(ansatz_name(a)));
  return {{"m", c.m},
          {"multistart_count", c.multistart_count},
          {"max_outer_iterations", c.max_outer_iterations},
          {"max_inner_iterations", c.max_inner_iterations},
          {"constraint_tol", c.constraint_tol},
          {"kkt_tol", c.kkt_tol},
          {"penalty_initial", c.penalty_initial},
          {"penalty_growth", c.penalty_growth},
          {"seed", c.seed},
          {"ansatz_set", ansatz},
          {"threads", c.threads}};
}

OptimConfig optim_config_from_json(const json& j, OptimConfig base) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  static const std::set<std::string> known{
      "m",       "multistart_count", "max_outer_iterations", "max_inner_iterations",
      "constraint_tol", "kkt_tol", "penalty_initial", "penalty_growth",
      "seed",    "ansatz_set",       "threads"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw Error(ErrorCode::kInvalidArgument, "unknown config key '" + key + "'");
  }
  try {
    base.m = j.value("m", base.m);
    base.multistart_count = j.value("multistart_count", base.multistart_count);
    base.max_outer_iterations = j.value("max_outer_iterations", base.max_outer_iterations);
    base.max_inner_iterations = j.value("max_inner_iterations", base.max_inner_iterations);
    base.constraint_tol = j.value("constraint_tol", base.constraint_tol);
    base.kkt_tol = j.value("kkt_tol", base.kkt_tol);
    base.penalty_initial = j.value("penalty_initial", base.penalty_initial);
    base.penalty_growth = j.value("penalty_growth", base.penalty_growth);
    base.seed = j.value("seed", base.seed);
    base.threads = j.value("threads", base.threads);
    if (j.contains("ansatz_set")) {
      base.ansatz_set.clear();
      for (const auto& name : j.at("ansatz_set")) {
        const auto s = name.get<std::string>();
        if (s == "constant") {
          base.ansatz_set.emplace_back(ConstantStart{});
        } else if (s == "checkerboard") {
          base.ansatz_set.emplace_back(CheckerboardStart{});
        } else if (s == "bipodal_random") {
          base.ansatz_set.emplace_back(BipodalRandomStart{});
        } else if (s == "upper_corner") {
          base.ansatz_set.emplace_back(UpperCornerStart{});
        } else {
          throw Error(ErrorCode::kInvalidArgument, "unknown ansatz '" + s + "'");
        }
      }
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad config value: ") + ex.what());
  }
  base.validate();
  return base;
}

json to_json(const DensityPair& p) { return {{"e", json_real(p.e)}, {"t", json_real(p.t)}}; }

json to_json(const Graphon& g) {
  json rows = json::array();
  for (int i = 0; i < g.resolution(); ++i) {
    json row = json::array();
    for (int j = 0; j < g.resolution(); ++j) row.push_back(g(i, j));
    rows.push_back(row);
  }
  return {{"m", g.resolution()}, {"values", rows}};
}

json to_json(const EntropyResult& r, bool include_graphon) {
  json out{{"target", to_json(r.target)},
           {"achieved", to_json(r.achieved)},
           {"s", json_real(r.s_value)},
           {"beta1", json_real(r.beta1)},
           {"beta2", json_real(r.beta2)},
           {"el_residual_norm", json_real(r.el_residual_norm)},
           {"converged", r.converged},
           {"status", std::string(to_string(r.status))},
           {"constraint_violation", json_real(r.constraint_violation)},
           {"kkt_norm", json_real(r.kkt_norm)},
           {"best_start", r.best_start},
           {"multistart_values", reals(r.multistart_values)}};
  if (include_graphon && r.status != SolveStatus::kInfeasible) out["g_star"] = to_json(r.g_star);
  return out;
}

json to_json(const CreaseBoundConstants& c) {
  return {{"e", c.e},
          {"f_minus", c.f_minus},
          {"argmin_x", c.argmin_x},
          {"linear_constant_below", c.linear_constant_below},
          {"linear_constant_above", c.linear_constant_above},
          {"power_constant", c.power_constant}};
}

json to_json(const BipodalSolution& s) {
  return {{"epsilon", s.epsilon},         {"c_eigenvalue", s.c_eigenvalue},
          {"s", s.s_value},               {"beta1", json_real(s.beta1)},
          {"beta2", json_real(s.beta2)},  {"betas_finite", s.betas_finite}};
}

json to_json(const CreaseScan& scan) {
  auto branch = [](const std::vector<CreasePoint>& points) {
    json out = json::array();
    for (const auto& p : points) {
      out.push_back({{"delta", p.delta},
                     {"t", p.t},
                     {"in_region", p.in_region},
                     {"status", p.in_region ? std::string(to_string(p.status)) : "outside_region"},
                     {"s", json_real(p.s_value)},
                     {"drop", json_real(p.drop)},
                     {"quotient", json_real(p.quotient)}});
    }
    return out;
  };
  json checks = json::array();
  for (const auto& b : scan.bound_checks) {
    checks.push_back({{"side", b.side},
                      {"bound", b.bound},
                      {"delta", b.delta},
                      {"drop", json_real(b.drop)},
                      {"required", json_real(b.required)},
                      {"holds", b.holds}});
  }
  const auto& fit = scan.left_exponent_fit;
  json out{{"e", scan.e},
           {"motif_edges", scan.motif_edges},
           {"t_curve", scan.t_curve},
           {"on_curve", to_json(scan.on_curve, false)},
           {"left", branch(scan.left)},
           {"right", branch(scan.right)},
           {"left_slopes", reals(scan.left_slopes)},
           {"right_slopes", reals(scan.right_slopes)},
           {"left_exponent_fit",
            {{"valid", fit.valid},
             {"points", fit.points},
             {"exponent", json_real(fit.exponent)},
             {"exponent_se", json_real(fit.exponent_se)},
             {"constant", json_real(fit.constant)}}},
           {"bound_checks", checks}};
  out["constants"] = scan.constants ? to_json(*scan.constants) : json(nullptr);
  return out;
}

json to_json(const SpectralReport& r) {
  return {{"eigenvalues", reals(r.eigenvalues)}, {"trace2", r.trace2},     {"trace3", r.trace3},
          {"quad_term", r.quad_term},           {"delta_t", r.delta_t},   {"numerical_rank", r.numerical_rank}};
}

json to_json(const TraceInequality& r) {
  return {{"lhs", r.lhs}, {"rhs", r.rhs}, {"gap", r.gap}, {"holds", r.holds}, {"rank_one", r.rank_one}};
}

json to_json(const FreeEnergyResult& r) {
  json values = json::array();
  for (std::size_t i = 0; i < r.start_values.size(); ++i) {
    values.push_back({{"psi", json_real(r.start_values[i])}, {"densities", to_json(r.start_densities[i])}});
  }
  return {{"psi", json_real(r.psi)},
          {"maximizer_densities", to_json(r.maximizer_densities)},
          {"degenerate", r.degenerate},
          {"secondary_densities", r.secondary_densities ? to_json(*r.secondary_densities) : json(nullptr)},
          {"converged", r.converged},
          {"kkt_norm", json_real(r.kkt_norm)},
          {"best_start", r.best_start},
          {"starts", values}};
}

json to_json(const TransitionPoint& p) {
  return {{"beta2", p.beta2},   {"beta1_critical", p.beta1_critical}, {"u_low", p.u_low},
          {"u_high", p.u_high}, {"psi_gap", p.psi_gap}};
}

json to_json(const TransitionCurve& c) {
  json points = json::array();
  for (const auto& p : c.points) points.push_back(to_json(p));
  return {{"points", points}, {"no_transition", reals(c.no_transition)}};
}

json to_json(const ThmFiveReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"beta1", row.params.beta1},
                    {"beta2", row.params.beta2},
                    {"psi", json_real(row.psi)},
                    {"densities", to_json(row.densities)},
                    {"degenerate", row.degenerate},
                    {"converged", row.converged},
                    {"violation", row.violation},
                    {"adversarial_densities", to_json(row.adversarial_densities)},
                    {"adversarial_escaped", row.adversarial_escaped}});
  }
  return {{"rows", rows}, {"violations", r.violations}};
}

json to_json(const ConvexityReport& r) {
  json samples = json::array();
  for (const auto& [t, d2] : r.second_derivative_samples) samples.push_back({t, json_real(d2)});
  return {{"c1", r.c1}, {"c2", r.c2}, {"max_fd_discrepancy", r.max_fd_discrepancy}, {"samples", samples}};
}

json to_json(const CensusComparison& c) {
  json points = json::array();
  for (const auto& p : c.points) {
    points.push_back({{"point", to_json(p.point)},
                      {"s_census", json_real(p.s_census)},
                      {"s_variational", json_real(p.s_variational)},
                      {"gap", json_real(p.gap)}});
  }
  json ridge = json::array();
  for (const auto& r : c.ridge) {
    ridge.push_back({{"edges", r.edges},
                     {"e", r.e},
                     {"argmax_triangles", r.argmax_triangles},
                     {"ridge_triangles", r.ridge_triangles},
                     {"distance", r.distance}});
  }
  return {{"n", c.n}, {"alpha", c.alpha}, {"points", points}, {"ridge", ridge}};
}

}  // namespace graphent
