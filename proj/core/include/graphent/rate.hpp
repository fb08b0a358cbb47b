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

#include <algorithm>
#include <cmath>

namespace graphent {

// Interior clamp applied before evaluating I0' (which diverges at 0 and 1).
inline constexpr double kClampEta = 1e-12;

inline double clamp_interior(double u) { return std::clamp(u, kClampEta, 1.0 - kClampEta); }

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

/// Bernoulli large-deviation rate I0(u) = (u ln u + (1-u) ln(1-u)) / 2,
/// extended continuously by I0(0) = I0(1) = 0. Negative on (0, 1).
inline double rate_i0(double u) { return 0.5 * (xlogx(u) + xlogx(1.0 - u)); }

/// I0'(u) = ln(u / (1-u)) / 2, evaluated at the clamped argument.
inline double rate_i0_prime(double u) {
  const double v = clamp_interior(u);
  return 0.5 * (std::log(v) - std::log1p(-v));
}

/// I0''(u) = 1 / (2u(1-u)).
inline double rate_i0_second(double u) {
  const double v = clamp_interior(u);
  return 0.5 / (v * (1.0 - v));
}

}  // namespace graphent
