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

#include <vector>

#include "graphent/graphon.hpp"

namespace graphent {

// Spectral view of a step kernel dg on [0,1]^2. On block-constant functions
// the integral operator T_dg acts as the matrix dg / m, and it annihilates the
// orthogonal complement, so its nonzero spectrum and all trace powers are
// those of dg / m.

struct SpectralReport {
  std::vector<double> eigenvalues;  // descending by magnitude
  double trace2 = 0.0;              // Tr T^2
  double trace3 = 0.0;              // Tr T^3
  double quad_term = 0.0;           // 3 e <1, T^2 1>
  double delta_t = 0.0;             // quad_term + trace3
  int numerical_rank = 0;
};

struct TraceInequality {
  double lhs = 0.0;  // |Tr T^3|
  double rhs = 0.0;  // (Tr T^2)^{3/2}
  double gap = 0.0;  // rhs - lhs
  bool holds = false;
  bool rank_one = false;
};

/// Eigenvalues of dg / m sorted by descending magnitude.
/// Throws kAsymmetricMatrix (tolerance 1e-12 relative to max |dg|).
std::vector<double> kernel_operator_spectrum(const Matrix& dg);

/// Tr T^p for p in {2, 3}. Computed both from the spectrum and as a direct
/// matrix-power trace; a disagreement above 1e-10 raises kInvariantViolation.
/// Returns the direct value. Throws kUnsupportedPower otherwise.
double trace_power(const Matrix& dg, int p);

/// Count of |mu| > 1e-9 * max(1, |mu_1|).
int numerical_rank(const std::vector<double>& eigenvalues);

/// Splits t(g) - e^3 = 3e <1, T^2 1> + Tr T^3 for dg = g - e. Requires
/// |e(g) - e| <= 1e-8 (kEdgeDensityMismatch), since the linear term is dropped.
SpectralReport delta_t_decomposition(const Graphon& g, double e);

/// |Tr T^3| <= (Tr T^2)^{3/2}, with equality only for rank-one kernels.
TraceInequality verify_trace_inequality(const Matrix& dg);

}  // namespace graphent
