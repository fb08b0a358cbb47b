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

#include "graphent/phase_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>

#include "graphent/error.hpp"
#include "graphent/graphon_io.hpp"
#include "graphent/parallel.hpp"
#include "graphent/report_json.hpp"

namespace graphent {

namespace {

using nlohmann::json;

constexpr double kDetectionSigmas = 5.0;

std::string_view kind_name(TGridKind kind) {
  switch (kind) {
    case TGridKind::kOffsets: return "offsets";
    case TGridKind::kRelativeOffsets: return "relative";
    case TGridKind::kAbsolute: return "absolute";
  }
  return "offsets";
}

// t values of one slice, ascending, with the index of the point closest to
// the curve.
std::vector<double> slice_points(const ScanSpec& spec, double e, std::size_t& pivot) {
  const double curve = std::pow(e, spec.motif.edge_count());
  std::vector<double> ts;
  if (spec.t_kind == TGridKind::kAbsolute) {
    ts = spec.t_values;
  } else {
    ts.push_back(curve);
    for (double d : spec.t_values) {
      const double step = spec.t_kind == TGridKind::kOffsets ? d : d * curve;
      ts.push_back(curve - step);
      ts.push_back(curve + step);
    }
  }
  std::erase_if(ts, [](double t) { return t < 0.0 || t > 1.0; });
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  pivot = 0;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (std::abs(ts[i] - curve) < std::abs(ts[pivot] - curve)) pivot = i;
  }
  return ts;
}

ScanRow solve_point(double e, double t, const ScanSpec& spec, const OptimConfig& config,
                    std::optional<Graphon>& warm) {
  ScanRow row{.e = e, .t = t};
  try {
    std::vector<Ansatz> extra;
    if (warm) extra.emplace_back(WarmStart{*warm});
    const EntropyResult r = maximize_entropy({e, t}, spec.motif, config, extra);
    row.status = to_string(r.status);
    row.s_value = r.s_value;
    row.beta1 = r.beta1;
    row.beta2 = r.beta2;
    row.converged = r.converged;
    row.el_residual = r.el_residual_norm;
    row.constraint_violation = r.constraint_violation;
    if (r.status != SolveStatus::kInfeasible) warm = r.g_star;
  } catch (const Error&) {
    row.status = "error";
  }
  return row;
}

}  // namespace

void ScanSpec::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (e_grid.empty()) fail("scan e_grid is empty");
  if (t_values.empty()) fail("scan t grid is empty");
  for (double e : e_grid) {
    if (!(e > 0.0 && e < 1.0)) fail("scan e values must lie in (0, 1)");
  }
  for (double t : t_values) {
    if (t_kind == TGridKind::kAbsolute ? !(t >= 0.0 && t <= 1.0) : !(t > 0.0)) {
      fail("bad t grid value " + format_real(t));
    }
  }
  config.validate();
}

ScanSpec scan_spec_from_json(const json& j) {
  try {
    if (j.value("version", 0) != 1) throw Error(ErrorCode::kInvalidArgument, "scan spec needs \"version\": 1");
    ScanSpec spec;
    spec.e_grid = j.at("e_grid").get<std::vector<double>>();
    const json& tg = j.at("t_grid");
    const std::string kind = tg.value("kind", "offsets");
    if (kind == "offsets") {
      spec.t_kind = TGridKind::kOffsets;
    } else if (kind == "relative") {
      spec.t_kind = TGridKind::kRelativeOffsets;
    } else if (kind == "absolute") {
      spec.t_kind = TGridKind::kAbsolute;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown t_grid kind '" + kind + "'");
    }
    spec.t_values = tg.at("values").get<std::vector<double>>();
    if (j.contains("motif")) spec.motif = motif_from_json(j.at("motif"));
    if (j.contains("config")) spec.config = optim_config_from_json(j.at("config"), spec.config);
    spec.output_path = j.value("output_path", "");
    spec.validate();
    return spec;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kInvalidArgument, std::string("bad scan spec: ") + ex.what());
  }
}

json to_json(const ScanSpec& spec) {
  return {{"version", 1},
          {"e_grid", spec.e_grid},
          {"t_grid", {{"kind", kind_name(spec.t_kind)}, {"values", spec.t_values}}},
          {"motif", to_json(spec.motif)},
          {"config", to_json(spec.config)},
          {"output_path", spec.output_path}};
}

ScanTable phase_diagram_scan(const ScanSpec& spec) {
  spec.validate();
  OptimConfig inner = spec.config;
  inner.threads = 1;
  std::vector<std::vector<ScanRow>> slices(spec.e_grid.size());
  parallel_for(spec.e_grid.size(), spec.config.threads, [&](std::size_t s) {
    const double e = spec.e_grid[s];
    std::size_t pivot = 0;
    const std::vector<double> ts = slice_points(spec, e, pivot);
    std::vector<ScanRow> rows(ts.size());
    std::optional<Graphon> warm;
    rows[pivot] = solve_point(e, ts[pivot], spec, inner, warm);
    std::optional<Graphon> warm_right = warm;
    for (std::size_t i = pivot; i-- > 0;) rows[i] = solve_point(e, ts[i], spec, inner, warm);
    for (std::size_t i = pivot + 1; i < ts.size(); ++i) {
      rows[i] = solve_point(e, ts[i], spec, inner, warm_right);
    }
    slices[s] = std::move(rows);
  });
  ScanTable table{.motif_edges = spec.motif.edge_count()};
  std::vector<std::size_t> order(spec.e_grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return spec.e_grid[a] < spec.e_grid[b]; });
  for (std::size_t s : order) {
    table.rows.insert(table.rows.end(), slices[s].begin(), slices[s].end());
  }
  return table;
}

void write_scan_csv(std::ostream& out, const ScanTable& table) {
  out << "e,t,status,s,beta1,beta2,converged,el_residual,constraint_violation\n";
  for (const auto& r : table.rows) {
    out << format_real(r.e) << ',' << format_real(r.t) << ',' << r.status << ','
        << format_real(r.s_value) << ',' << format_real(r.beta1) << ',' << format_real(r.beta2)
        << ',' << (r.converged ? "true" : "false") << ',' << format_real(r.el_residual) << ','
        << format_real(r.constraint_violation) << '\n';
  }
}

std::vector<RidgeCheck> ridge_check(const ScanTable& table) {
  std::vector<RidgeCheck> out;
  std::size_t begin = 0;
  while (begin < table.rows.size()) {
    std::size_t end = begin;
    while (end < table.rows.size() && table.rows[end].e == table.rows[begin].e) ++end;
    RidgeCheck check;
    check.e = table.rows[begin].e;
    check.t_curve = std::pow(check.e, table.motif_edges);
    std::optional<std::size_t> best;
    for (std::size_t i = begin; i < end; ++i) {
      if (!table.rows[i].converged) continue;
      if (!best || table.rows[i].s_value > table.rows[*best].s_value) best = i;
    }
    if (best) {
      check.argmax_t = table.rows[*best].t;
      double step = std::numeric_limits<double>::infinity();
      for (std::size_t i = begin; i < end; ++i) {
        if (i != *best) step = std::min(step, std::abs(table.rows[i].t - check.argmax_t));
      }
      check.grid_step = std::isfinite(step) ? step : 0.0;
      check.holds = std::abs(check.argmax_t - check.t_curve) <= check.grid_step + 1e-12;
    }
    out.push_back(check);
    begin = end;
  }
  return out;
}

CreaseVerdict crease_verdict(const CreaseScan& scan) {
  CreaseVerdict v{.e = scan.e};
  auto side_fit = [](const std::vector<CreasePoint>& branch, double sign, double& value, double& se,
                     int& count) {
    std::vector<double> x, y;
    for (const auto& p : branch) {
      if (p.in_region && p.status != SolveStatus::kInfeasible) {
        x.push_back(p.delta);
        y.push_back(sign * p.quotient);
      }
    }
    count = static_cast<int>(x.size());
    if (count < 3) return false;
    const std::size_t used = std::max<std::size_t>(3, (x.size() + 1) / 2);
    const LinearFit fit = fit_line(std::span(x).first(used), std::span(y).first(used));
    value = fit.intercept;
    se = fit.intercept_se;
    return true;
  };
  const bool left = side_fit(scan.left, 1.0, v.left_derivative, v.left_se, v.left_points);
  const bool right = side_fit(scan.right, -1.0, v.right_derivative, v.right_se, v.right_points);
  for (const auto& b : scan.bound_checks) v.bounds_hold = v.bounds_hold && b.holds;
  if (left && right) {
    const double se = std::hypot(v.left_se, v.right_se);
    v.verdict = std::abs(v.left_derivative - v.right_derivative) > kDetectionSigmas * se
                    ? "crease detected"
                    : "no crease detected";
  } else if (right && v.left_points == 0) {
    v.verdict = "one-sided";
  } else {
    v.verdict = "insufficient data";
  }
  return v;
}

CreaseReport crease_report(const std::vector<double>& e_values, const Motif& motif,
                           const OptimConfig& config, const std::vector<double>& offsets) {
  if (e_values.empty()) throw Error(ErrorCode::kInvalidArgument, "crease_report needs e values");
  for (double e : e_values) {
    if (!(e > 0.0 && e < 1.0)) throw Error(ErrorCode::kValueOutOfRange, "crease e values must lie in (0, 1)");
  }
  OptimConfig inner = config;
  inner.threads = 1;
  std::vector<std::optional<CreaseScan>> scans(e_values.size());
  parallel_for(e_values.size(), config.threads,
               [&](std::size_t i) { scans[i] = crease_scan(e_values[i], motif, offsets, inner); });
  CreaseReport report;
  for (auto& scan : scans) report.scans.push_back(std::move(*scan));
  report.all_detected = true;
  for (const auto& scan : report.scans) {
    report.verdicts.push_back(crease_verdict(scan));
    report.all_detected = report.all_detected && report.verdicts.back().verdict == "crease detected";
  }
  return report;
}

}  // namespace graphent
