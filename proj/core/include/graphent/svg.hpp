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

#include <string>

#include "graphent/ergm.hpp"
#include "graphent/graphon.hpp"
#include "graphent/phase_analysis.hpp"

namespace graphent {

// Self-contained SVG documents. Output is a pure function of the input.

/// Heatmap of s over (e, t) for the rows with a finite s, overlaid with the
/// region curves. Throws kEmptyTable when no row is usable.
std::string render_scan_heatmap(const ScanTable& table);

/// Upper boundary, lower envelope, and the ER curve t = e^3, sampled at
/// `samples` points each. Throws kInvalidArgument for samples < 2.
std::string render_region(int samples);

/// Grayscale block heatmap, black = 1.
std::string render_graphon(const Graphon& g);

/// beta1_critical against beta2. Throws kEmptyTable without points.
std::string render_transition_curve(const TransitionCurve& curve);

}  // namespace graphent
