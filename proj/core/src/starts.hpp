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

#include "graphent/optimizer.hpp"
#include "graphent/random.hpp"

namespace graphent::detail {

/// Builds the starting block matrix for one multistart run. `target.t` is
/// only used by the shape-aware ansatz (checkerboard, upper corner).
Matrix make_start(const Ansatz& ansatz, const DensityPair& target, const Motif& motif, int m,
                  SplitMix64& rng);

/// Random k-podal (k in 2..4) block matrix with jitter, shifted to mean e.
Matrix random_restart(double e, int m, SplitMix64& rng);

}  // namespace graphent::detail
