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

#include <string_view>

namespace graphent::region {

// Achievable (edge, triangle) densities for the triangle model.
//
// Upper boundary t = e^{3/2}. The true lower boundary is zero on [0, 1/2]
// and a scalloped curve above 1/2 that touches t = e(2e - 1) at
// e_k = k/(k+1); only that envelope is modeled here, so the strip between
// the envelope and the scallops is unresolved and treated as feasible.

inline constexpr double kCurveTol = 1e-12;

enum class Position {
  kAboveEr,
  kOnEr,
  kBelowEr,
  kOutsideUpper,
  kBelowEnvelope,
};

std::string_view to_string(Position p);

double upper_boundary(double e);
double lower_envelope(double e);
double er_curve(double e);

/// e_k = k / (k + 1), k >= 1.
double touch_point(int k);

Position classify(double e, double t, double tol = kCurveTol);

inline bool is_feasible(Position p) {
  return p != Position::kOutsideUpper && p != Position::kBelowEnvelope;
}

}  // namespace graphent::region
