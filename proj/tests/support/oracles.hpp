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

// Reference implementations that share no code with the library: brute-force
// enumeration, textbook formulas and plain loops.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphent/random.hpp"

namespace oracle {

using Matrix = Eigen::MatrixXd;

inline double i0(double u) {
  auto xl = [](double x) { return x <= 0.0 ? 0.0 : x * std::log(x); };
  return 0.5 * (xl(u) + xl(1.0 - u));
}

inline double i0_prime(double u) { return 0.5 * std::log(u / (1.0 - u)); }

/// Mean of prod_{(a,b) in edges} v(x_a, x_b) over all m^ell vertex maps.
inline double hom_density(const Matrix& v, int ell, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(v.rows());
  std::vector<int> x(ell, 0);
  double sum = 0.0;
  std::int64_t maps = 0;
  while (true) {
    double prod = 1.0;
    for (const auto& [a, b] : edges) prod *= v(x[a], x[b]);
    sum += prod;
    ++maps;
    int k = 0;
    while (k < ell && ++x[k] == m) x[k++] = 0;
    if (k == ell) break;
  }
  return sum / static_cast<double>(maps);
}

inline double triangle_density(const Matrix& v) { return hom_density(v, 3, {{0, 1}, {1, 2}, {0, 2}}); }

inline double star_density(const Matrix& v, int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return hom_density(v, k + 1, edges);
}

inline double edge_density(const Matrix& v) { return v.mean(); }

inline double rate(const Matrix& v) {
  double sum = 0.0;
  for (int i = 0; i < v.rows(); ++i) {
    for (int j = 0; j < v.cols(); ++j) sum += i0(v(i, j));
  }
  return sum / static_cast<double>(v.size());
}

inline Matrix random_symmetric(graphent::SplitMix64& rng, int m, double lo, double hi) {
  Matrix v(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) v(i, j) = v(j, i) = rng.uniform(lo, hi);
  }
  return v;
}

/// Traces of T = dg / m by plain sums.
inline double trace2(const Matrix& dg) {
  const double m = static_cast<double>(dg.rows());
  return dg.cwiseProduct(dg).sum() / (m * m);
}

inline double trace3(const Matrix& dg) {
  const int m = static_cast<int>(dg.rows());
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) sum += dg(i, j) * dg(j, k) * dg(k, i);
    }
  }
  return sum / (static_cast<double>(m) * m * m);
}

/// Exact census by brute force: counts[edges][triangles].
inline std::vector<std::vector<std::uint64_t>> brute_census(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int e_max = static_cast<int>(pairs.size());
  const int t_max = n * (n - 1) * (n - 2) / 6;
  std::vector<std::vector<std::uint64_t>> counts(e_max + 1, std::vector<std::uint64_t>(t_max + 1, 0));
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << e_max); ++code) {
    bool adj[8][8] = {};
    int edges = 0;
    for (int k = 0; k < e_max; ++k) {
      if ((code >> k) & 1U) {
        adj[pairs[k].first][pairs[k].second] = adj[pairs[k].second][pairs[k].first] = true;
        ++edges;
      }
    }
    int triangles = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) triangles += adj[a][b] && adj[b][c] && adj[a][c];
      }
    }
    ++counts[edges][triangles];
  }
  return counts;
}

/// s(1/2, t) on the slice below the ER curve.
inline double half_slice_entropy(double t) { return -i0(0.5 + std::cbrt(0.125 - t)); }

/// Multipliers of the slice optimizer at half-gap eps.
inline std::pair<double, double> half_slice_betas(double eps) {
  const double b2 = -std::log((0.5 + eps) / (0.5 - eps)) / (6.0 * eps * eps);
  return {-0.75 * b2, b2};
}

}  // namespace oracle
