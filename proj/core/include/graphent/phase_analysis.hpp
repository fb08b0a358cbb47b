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

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphent/crease.hpp"
#include "graphent/motif.hpp"
#include "graphent/optimizer.hpp"

namespace graphent {

enum class TGridKind {
  kOffsets,          // t = e^k -+ d, plus the curve point itself
  kRelativeOffsets,  // t = e^k (1 -+ r), plus the curve point itself
  kAbsolute,         // t values as given
};

struct ScanSpec {
  std::vector<double> e_grid;
  TGridKind t_kind = TGridKind::kOffsets;
  std::vector<double> t_values;
  Motif motif = Motif::triangle();
  OptimConfig config;
  std::string output_path;

  /// Throws kInvalidArgument on empty grids, e outside (0, 1), non-positive
  /// offsets or absolute t outside [0, 1].
  void validate() const;
};

/// JSON schema (version 1):
///   {"version": 1, "e_grid": [...],
///    "t_grid": {"kind": "offsets" | "relative" | "absolute", "values": [...]},
///    "motif": "triangle" | "edge" | "star:k" | {"ell": n, "edges": [[i, j], ...]},
///    "config": {...}, "output_path": "..."}
ScanSpec scan_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ScanSpec& spec);

struct ScanRow {
  double e = 0.0;
  double t = 0.0;
  std::string status;  // SolveStatus name, or "error" when the solve threw
  double s_value = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  bool converged = false;
  double el_residual = 0.0;
  double constraint_violation = 0.0;
};

struct ScanTable {
  int motif_edges = 0;
  std::vector<ScanRow> rows;  // e ascending, then t ascending
};

/// Sweeps every e slice. Within a slice the points are solved in order of
/// distance from e^k on each side, each warm-started from its predecessor.
/// Slices run concurrently on config.threads workers and every solve is
/// single-threaded, so the table does not depend on the worker count.
ScanTable phase_diagram_scan(const ScanSpec& spec);

/// Header: e,t,status,s,beta1,beta2,converged,el_residual,constraint_violation
void write_scan_csv(std::ostream& out, const ScanTable& table);

struct RidgeCheck {
  double e = 0.0;
  double t_curve = 0.0;
  double argmax_t = 0.0;
  double grid_step = 0.0;  // spacing to the nearest other t in the slice
  bool holds = false;      // |argmax_t - e^k| <= grid_step
};

/// Per e slice, compares argmax_t s over converged rows with e^k.
std::vector<RidgeCheck> ridge_check(const ScanTable& table);

struct CreaseVerdict {
  double e = 0.0;
  double left_derivative = 0.0;  // ds/dt from below, extrapolated to delta = 0
  double left_se = 0.0;
  double right_derivative = 0.0;  // ds/dt from above
  double right_se = 0.0;
  int left_points = 0;
  int right_points = 0;
  bool bounds_hold = true;
  // "crease detected", "no crease detected", "one-sided" (only the upper
  // branch is available) or "insufficient data".
  std::string verdict;
};

struct CreaseReport {
  std::vector<CreaseScan> scans;
  std::vector<CreaseVerdict> verdicts;
  bool all_detected = false;
};

inline const std::vector<double>& default_crease_offsets() {
  static const std::vector<double> offsets{1e-4, 3e-4, 1e-3, 3e-3, 1e-2, 3e-2};
  return offsets;
}

/// One-sided derivatives are the intercepts of straight-line fits of the
/// difference quotients against delta on the smallest half (at least 3) of
/// each branch. The crease is detected when they differ by more than five
/// combined standard errors. Slices run concurrently.
CreaseReport crease_report(const std::vector<double>& e_values, const Motif& motif,
                           const OptimConfig& config,
                           const std::vector<double>& offsets = default_crease_offsets());

CreaseVerdict crease_verdict(const CreaseScan& scan);

}  // namespace graphent
