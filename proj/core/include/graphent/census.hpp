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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "graphent/optimizer.hpp"

namespace graphent {

/// Exact counts of labeled simple graphs on n vertices, binned by
/// (edge count, triangle count).
class CensusTable {
 public:
  CensusTable() = default;
  explicit CensusTable(int n);

  int n() const { return n_; }
  int max_edges() const { return max_edges_; }          // C(n, 2)
  int max_triangles() const { return max_triangles_; }  // C(n, 3)

  std::uint64_t count(int edges, int triangles) const;
  void add(int edges, int triangles, std::uint64_t amount);
  /// Sum of all counts; 2^C(n,2) for a complete census.
  std::uint64_t total() const;
  /// Sum over triangle counts for a fixed edge count.
  std::uint64_t row_total(int edges) const;

  bool operator==(const CensusTable&) const = default;

 private:
  int n_ = 0;
  int max_edges_ = 0;
  int max_triangles_ = 0;
  std::vector<std::uint64_t> counts_;
};

inline constexpr int kMaxCensusDefault = 7;
inline constexpr int kMaxCensusGated = 8;

/// Enumerates all 2^C(n,2) labeled graphs in Gray-code order, updating the
/// triangle count in O(1) words per edge flip. The code space is cut into
/// fixed contiguous chunks, so the table is independent of `threads`.
/// `progress`, if set, receives (chunks done, chunk count) after each chunk.
/// Throws kTooLarge for n > 7 unless allow_n8 (and always for n > 8),
/// kInvalidArgument for n < 1.
CensusTable enumerate_census(int n, bool allow_n8 = false, int threads = 1,
                             const std::function<void(int, int)>& progress = {});

/// ln(sum of counts with |edges/C(n,2) - e| < alpha and
/// |triangles/C(n,3) - t| < alpha) / n^2, or -inf for an empty window.
/// Triangle density is 0 for n < 3. Throws kValueOutOfRange unless alpha > 0.
double empirical_entropy(const CensusTable& table, double e, double t, double alpha);

struct CensusPointComparison {
  DensityPair point;
  double s_census = 0.0;
  double s_variational = 0.0;
  double gap = 0.0;  // s_variational - s_census
};

struct CensusRidgeRow {
  int edges = 0;
  double e = 0.0;             // edges / C(n, 2)
  int argmax_triangles = 0;   // most populated triangle bin
  double ridge_triangles = 0.0;  // e^3 C(n, 3)
  double distance = 0.0;      // |argmax - ridge| in bins
};

struct CensusComparison {
  int n = 0;
  double alpha = 0.0;
  std::vector<CensusPointComparison> points;
  std::vector<CensusRidgeRow> ridge;  // one row per edge count
};

using EntropySolver = std::function<double(const DensityPair&)>;

CensusComparison compare_to_variational(const CensusTable& table,
                                        std::span<const DensityPair> points, double alpha,
                                        const EntropySolver& reference);

/// Ridge rows only; no solver calls.
std::vector<CensusRidgeRow> census_ridge(const CensusTable& table);

/// CSV with header "n,edges,triangles,count"; nonzero bins only, ordered by
/// (edges, triangles).
void write_census_csv(std::ostream& out, const CensusTable& table);
CensusTable read_census_csv(std::istream& in);

}  // namespace graphent
