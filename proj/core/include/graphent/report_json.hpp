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

#include <nlohmann/json.hpp>

#include "graphent/census.hpp"
#include "graphent/crease.hpp"
#include "graphent/ergm.hpp"
#include "graphent/graphon.hpp"
#include "graphent/motif.hpp"
#include "graphent/optimizer.hpp"
#include "graphent/spectral.hpp"

namespace graphent {

// JSON views of the result types. Reals are written as JSON numbers; the
// non-finite values that can occur (multipliers at the ends of the e = 1/2
// slice, empty census windows) are written as the strings "inf", "-inf" and
// "nan". The field layout is documented in docs/json_schema.md.

nlohmann::json json_real(double x);

nlohmann::json to_json(const Motif& motif);
/// Accepts "edge", "triangle", "star:k" or {"ell": n, "edges": [[i, j], ...]}
/// with 1-based labels.
Motif motif_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OptimConfig& config);
/// Overrides the fields present in `j` on top of `base`. Unknown keys are
/// rejected with kInvalidArgument.
OptimConfig optim_config_from_json(const nlohmann::json& j, OptimConfig base = {});

nlohmann::json to_json(const DensityPair& p);
nlohmann::json to_json(const Graphon& g);
nlohmann::json to_json(const EntropyResult& r, bool include_graphon = true);
nlohmann::json to_json(const CreaseBoundConstants& c);
nlohmann::json to_json(const BipodalSolution& s);
nlohmann::json to_json(const CreaseScan& scan);
nlohmann::json to_json(const SpectralReport& r);
nlohmann::json to_json(const TraceInequality& r);
nlohmann::json to_json(const FreeEnergyResult& r);
nlohmann::json to_json(const TransitionPoint& p);
nlohmann::json to_json(const TransitionCurve& c);
nlohmann::json to_json(const ThmFiveReport& r);
nlohmann::json to_json(const ConvexityReport& r);
nlohmann::json to_json(const CensusComparison& c);

}  // namespace graphent
