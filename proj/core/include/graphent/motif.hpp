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
#include <string_view>
#include <utility>
#include <vector>

namespace graphent {

// Motifs with more vertices are rejected; contraction cost grows as m^(width+1).
inline constexpr int kMaxMotifVertices = 6;

/// A small connected simple graph H whose homomorphism density t(H, g)
/// constrains the entropy problem. Vertices are 0-based internally; the text
/// format uses 1-based labels.
class Motif {
 public:
  using Edge = std::pair<int, int>;

  /// Validates and normalizes the edge list (each pair stored as (lo, hi),
  /// sorted). Throws kInvalidMotif, kLoopEdge, kDuplicateEdge,
  /// kDisconnectedMotif or kMotifTooLarge.
  static Motif make(int vertex_count, std::vector<Edge> edges, std::string name = {});

  static Motif edge();
  static Motif triangle();
  /// k-star: one center joined to k leaves; k in [1, 5].
  static Motif star(int k);

  /// Accepts "edge", "triangle", "star:<k>".
  static Motif from_shorthand(std::string_view text);

  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }

  /// Neighbors of vertex v, ascending.
  std::vector<int> neighbors(int v) const;

  bool operator==(const Motif& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  Motif() = default;

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::string name_;
};

}  // namespace graphent
