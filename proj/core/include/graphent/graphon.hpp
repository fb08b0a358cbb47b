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

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "graphent/motif.hpp"

namespace graphent {

using Matrix = Eigen::MatrixXd;

/// Symmetric step graphon on a uniform m x m grid. Block (i, j) holds the
/// value of g on [i/m, (i+1)/m) x [j/m, (j+1)/m). Always symmetric with
/// entries in [0, 1]; construct through validate() or the factories below.
class Graphon {
 public:
  /// Throws kEmptyMatrix, kNonSquareMatrix, kAsymmetricMatrix or
  /// kValueOutOfRange. Symmetry is checked exactly.
  static Graphon validate(Matrix values);

  int resolution() const noexcept { return static_cast<int>(values_.rows()); }
  const Matrix& values() const noexcept { return values_; }
  double operator()(int i, int j) const { return values_(i, j); }

  bool operator==(const Graphon& other) const { return values_ == other.values_; }

 private:
  explicit Graphon(Matrix values) : values_(std::move(values)) {}

  Matrix values_;
};

Graphon constant_graphon(double a, int m);

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based vertex labels
};

/// Checkerboard embedding g^G: block (i, j) is 1 iff {i, j} is an edge.
/// Throws kLoopEdge, kDuplicateEdge, kInvalidArgument.
Graphon embed_graph(const SimpleGraph& graph);

double edge_density(const Graphon& g);

/// Exact homomorphism density t(H, g) of a step graphon.
double motif_density(const Graphon& g, const Motif& motif);

/// First variation of t(H, g). Convention, used by every gradient in the
/// library: for a symmetric perturbation dV of the block values,
///   t(V + dV) - t(V) = (1/m^2) * sum_{i,j} D(i,j) dV(i,j) + O(|dV|^2).
/// For triangles D equals h(x, y) = 3 * int g(x,z) g(y,z) dz.
Matrix motif_gradient(const Graphon& g, const Motif& motif);

/// I(g) = mean over blocks of I0(value).
double rate_function(const Graphon& g);

/// Blockwise I0'(value), in the same convention as motif_gradient.
Matrix rate_gradient(const Graphon& g);

struct BipodalGraphon {
  Graphon graphon;
  int split_blocks = 0;  // blocks in the first part
  double split = 0.0;    // split_blocks / m, the grid-rounded c
};

/// Two-part step graphon: p11 on [0,c)^2, p12 across, p22 on [c,1)^2.
/// c is rounded to the nearest multiple of 1/m.
BipodalGraphon bipodal_graphon(double c, double p11, double p12, double p22, int m);

/// Truncated homomorphism distance sum_j 2^-(j+1) |t(H_j, f) - t(H_j, g)|
/// over the supplied motifs (first motif has weight 1/2).
double graphon_distance(const Graphon& f, const Graphon& g, std::span<const Motif> motifs);

/// Area-weighted change of resolution. Exact refinement when the new
/// resolution is a multiple of the old one; edge density is always preserved.
Graphon resample(const Graphon& g, int new_resolution);

/// Relabels blocks: result(i, j) = g(perm[i], perm[j]).
Graphon permute_blocks(const Graphon& g, std::span<const int> perm);

/// Unchecked matrix-level kernels used by the solvers. Inputs must already
/// satisfy the Graphon invariants.
namespace kernel {

double edge_density(const Matrix& v);
double motif_density(const Matrix& v, const Motif& motif);
Matrix motif_gradient(const Matrix& v, const Motif& motif);
double rate_function(const Matrix& v);
Matrix rate_gradient(const Matrix& v);

/// Generic variable-elimination contraction, bypassing the closed-form fast
/// paths for edges, stars and triangles.
double motif_density_contracted(const Matrix& v, const Motif& motif);
Matrix motif_gradient_contracted(const Matrix& v, const Motif& motif);

}  // namespace kernel

}  // namespace graphent
