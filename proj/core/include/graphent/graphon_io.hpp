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

#include "graphent/graphon.hpp"
#include "graphent/motif.hpp"

namespace graphent {

// Text formats (UTF-8, '\n' line endings):
//
//   graphon v1 m=<m>
//   <m lines of m space-separated reals, 17 significant digits>
//
// The lower triangle is authoritative; upper-triangle entries must match it
// to within 1e-12 or the file is rejected.
//
//   motif v1 ell=<ell>
//   <one "i j" line per edge, 1-based>

void write_graphon(std::ostream& out, const Graphon& g);
Graphon read_graphon(std::istream& in);

void write_motif(std::ostream& out, const Motif& motif);
Motif read_motif(std::istream& in);

Graphon load_graphon(const std::string& path);
void save_graphon(const std::string& path, const Graphon& g);
Motif load_motif(const std::string& path);

/// Shortest decimal string that round-trips to the same double.
std::string format_real(double x);

}  // namespace graphent
