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

#include "graphent/motif.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "graphent/error.hpp"

namespace graphent {

Motif Motif::make(int vertex_count, std::vector<Edge> edges, std::string name) {
  if (vertex_count < 1) {
    throw Error(ErrorCode::kInvalidMotif, "motif needs at least one vertex");
  }
  if (vertex_count > kMaxMotifVertices) {
    throw Error(ErrorCode::kMotifTooLarge,
                "motif has " + std::to_string(vertex_count) + " vertices; limit is " +
                    std::to_string(kMaxMotifVertices));
  }
  std::set<Edge> seen;
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorCode::kInvalidMotif, "edge endpoint out of range");
    }
    if (a == b) throw Error(ErrorCode::kLoopEdge, "motif edge is a loop");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw Error(ErrorCode::kDuplicateEdge, "motif edge listed twice");
    }
  }
  if (edges.empty()) {
    throw Error(ErrorCode::kInvalidMotif, "motif needs at least one edge");
  }
  std::sort(edges.begin(), edges.end());

  // Union-find connectivity check.
  std::vector<int> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [a, b] : edges) parent[find(a)] = find(b);
  for (int v = 1; v < vertex_count; ++v) {
    if (find(v) != find(0)) {
      throw Error(ErrorCode::kDisconnectedMotif, "motif must be connected");
    }
  }

  Motif motif;
  motif.vertex_count_ = vertex_count;
  motif.edges_ = std::move(edges);
  motif.name_ = std::move(name);
  return motif;
}

Motif Motif::edge() { return make(2, {{0, 1}}, "edge"); }

Motif Motif::triangle() { return make(3, {{0, 1}, {0, 2}, {1, 2}}, "triangle"); }

Motif Motif::star(int k) {
  if (k < 1 || k + 1 > kMaxMotifVertices) {
    throw Error(ErrorCode::kMotifTooLarge, "star:" + std::to_string(k) + " is not supported");
  }
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= k; ++leaf) edges.emplace_back(0, leaf);
  return make(k + 1, std::move(edges), "star:" + std::to_string(k));
}

Motif Motif::from_shorthand(std::string_view text) {
  if (text == "edge") return edge();
  if (text == "triangle") return triangle();
  if (text.starts_with("star:")) {
    auto digits = text.substr(5);
    int k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::kParseError, "bad star size in '" + std::string(text) + "'");
    }
    return star(k);
  }
  throw Error(ErrorCode::kParseError, "unknown motif shorthand '" + std::string(text) + "'");
}

std::vector<int> Motif::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphent
