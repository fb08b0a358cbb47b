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

#include "graphent/region.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphent/error.hpp"

namespace graphent::region {

namespace {

void require_unit(double e) {
  if (!(e >= 0.0 && e <= 1.0)) {
    throw Error(ErrorCode::kValueOutOfRange, "edge density " + std::to_string(e) + " outside [0, 1]");
  }
}

}  // namespace

std::string_view to_string(Position p) {
  switch (p) {
    case Position::kAboveEr: return "Above_ER";
    case Position::kOnEr: return "On_ER";
    case Position::kBelowEr: return "Below_ER";
    case Position::kOutsideUpper: return "OutsideUpper";
    case Position::kBelowEnvelope: return "BelowEnvelope";
  }
  return "Unknown";
}

double upper_boundary(double e) {
  require_unit(e);
  return e * std::sqrt(e);
}

double lower_envelope(double e) {
  require_unit(e);
  return std::max(0.0, e * (2.0 * e - 1.0));
}

double er_curve(double e) {
  require_unit(e);
  return e * e * e;
}

double touch_point(int k) {
  if (k < 1) throw Error(ErrorCode::kValueOutOfRange, "touch point index must be >= 1");
  return static_cast<double>(k) / (k + 1);
}

Position classify(double e, double t, double tol) {
  require_unit(e);
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::kValueOutOfRange, "triangle density " + std::to_string(t) + " outside [0, 1]");
  }
  if (t > upper_boundary(e) + tol) return Position::kOutsideUpper;
  if (t < lower_envelope(e) - tol) return Position::kBelowEnvelope;
  const double er = er_curve(e);
  if (std::abs(t - er) <= tol) return Position::kOnEr;
  return t > er ? Position::kAboveEr : Position::kBelowEr;
}

}  // namespace graphent::region
