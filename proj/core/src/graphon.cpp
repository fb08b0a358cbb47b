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

#include "graphent/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "graphent/error.hpp"
#include "graphent/rate.hpp"

namespace graphent {

namespace {

void require_range(double a, const char* what) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw Error(ErrorCode::kValueOutOfRange,
                std::string(what) + " = " + std::to_string(a) + " is outside [0, 1]");
  }
}

void require_resolution(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "resolution must be >= 1");
}

// Dense factor over a sorted variable list; variable vars[k] has stride m^k.
struct Factor {
  std::vector<int> vars;
  std::vector<double> data;
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Multiplies `factors` over the union of their variables and averages out
// `eliminated` (pass -1 to keep everything). Result is over the remaining
// sorted variables.
Factor combine(const std::vector<const Factor*>& factors, int eliminated, int m) {
  std::vector<int> all_vars;
  for (const Factor* f : factors) all_vars.insert(all_vars.end(), f->vars.begin(), f->vars.end());
  std::sort(all_vars.begin(), all_vars.end());
  all_vars.erase(std::unique(all_vars.begin(), all_vars.end()), all_vars.end());

  Factor out;
  for (int v : all_vars) {
    if (v != eliminated) out.vars.push_back(v);
  }
  const std::size_t mm = static_cast<std::size_t>(m);
  out.data.assign(ipow(mm, out.vars.size()), 0.0);

  // stride of each union position inside each factor and inside the output
  const std::size_t width = all_vars.size();
  std::vector<std::vector<std::size_t>> factor_strides(factors.size(),
                                                       std::vector<std::size_t>(width, 0));
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& fv = factors[f]->vars;
    for (std::size_t k = 0; k < fv.size(); ++k) {
      const auto pos = std::lower_bound(all_vars.begin(), all_vars.end(), fv[k]) - all_vars.begin();
      factor_strides[f][pos] = ipow(mm, k);
    }
  }
  std::vector<std::size_t> out_strides(width, 0);
  for (std::size_t k = 0, o = 0; k < width; ++k) {
    if (all_vars[k] != eliminated) out_strides[k] = ipow(mm, o++);
  }

  const double scale = eliminated >= 0 ? 1.0 / m : 1.0;
  std::vector<std::size_t> assignment(width, 0);
  std::vector<std::size_t> factor_index(factors.size(), 0);
  std::size_t out_index = 0;
  const std::size_t total = ipow(mm, width);
  for (std::size_t step = 0; step < total; ++step) {
    double product = scale;
    for (std::size_t f = 0; f < factors.size(); ++f) product *= factors[f]->data[factor_index[f]];
    out.data[out_index] += product;

    // odometer increment with incremental index updates
    for (std::size_t k = 0; k < width; ++k) {
      if (++assignment[k] < mm) {
        for (std::size_t f = 0; f < factors.size(); ++f) factor_index[f] += factor_strides[f][k];
        out_index += out_strides[k];
        break;
      }
      assignment[k] = 0;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        factor_index[f] -= factor_strides[f][k] * (mm - 1);
      }
      out_index -= out_strides[k] * (mm - 1);
    }
  }
  return out;
}

// Averages the product of edge factors over every vertex not in `keep`,
// eliminating minimum-degree vertices first. `skip_edge` (index into
// motif.edges(), or -1) is left out of the product.
Factor contract(const Matrix& v, const Motif& motif, int skip_edge, std::vector<int> keep) {
  const int m = static_cast<int>(v.rows());
  std::vector<Factor> pool;
  for (int e = 0; e < motif.edge_count(); ++e) {
    if (e == skip_edge) continue;
    const auto [a, b] = motif.edges()[e];
    Factor f;
    f.vars = {a, b};
    f.data.resize(static_cast<std::size_t>(m) * m);
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) f.data[i + static_cast<std::size_t>(m) * j] = v(i, j);
    }
    pool.push_back(std::move(f));
  }

  std::sort(keep.begin(), keep.end());
  std::vector<int> remaining;
  for (int u = 0; u < motif.vertex_count(); ++u) {
    if (!std::binary_search(keep.begin(), keep.end(), u)) remaining.push_back(u);
  }

  while (!remaining.empty()) {
    int best = -1;
    std::size_t best_degree = 0;
    for (int u : remaining) {
      std::set<int> nbrs;
      for (const Factor& f : pool) {
        if (std::find(f.vars.begin(), f.vars.end(), u) == f.vars.end()) continue;
        for (int w : f.vars) {
          if (w != u) nbrs.insert(w);
        }
      }
      if (best < 0 || nbrs.size() < best_degree) {
        best = u;
        best_degree = nbrs.size();
      }
    }
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));

    std::vector<Factor> touching;
    std::vector<Factor> rest;
    for (Factor& f : pool) {
      if (std::find(f.vars.begin(), f.vars.end(), best) != f.vars.end()) {
        touching.push_back(std::move(f));
      } else {
        rest.push_back(std::move(f));
      }
    }
    pool = std::move(rest);
    if (touching.empty()) continue;  // free vertex averages to 1
    std::vector<const Factor*> ptrs;
    for (const Factor& f : touching) ptrs.push_back(&f);
    pool.push_back(combine(ptrs, best, m));
  }

  // Expand onto the full keep set.
  Factor ones;
  ones.vars = keep;
  ones.data.assign(ipow(static_cast<std::size_t>(m), keep.size()), 1.0);
  std::vector<const Factor*> ptrs{&ones};
  for (const Factor& f : pool) ptrs.push_back(&f);
  return combine(ptrs, -1, m);
}

bool is_triangle(const Motif& motif) { return motif == Motif::triangle(); }

// Star center, or -1.
int star_center(const Motif& motif) {
  if (motif.edge_count() != motif.vertex_count() - 1) return -1;
  for (int c = 0; c < motif.vertex_count(); ++c) {
    if (static_cast<int>(motif.neighbors(c).size()) == motif.edge_count()) return c;
  }
  return -1;
}

}  // namespace

Graphon Graphon::validate(Matrix values) {
  if (values.size() == 0) throw Error(ErrorCode::kEmptyMatrix, "graphon matrix is empty");
  if (values.rows() != values.cols()) {
    throw Error(ErrorCode::kNonSquareMatrix, "graphon matrix must be square");
  }
  const Eigen::Index m = values.rows();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double x = values(i, j);
      if (!(x >= 0.0 && x <= 1.0)) {
        throw Error(ErrorCode::kValueOutOfRange,
                    "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " +
                        std::to_string(x) + " is outside [0, 1]");
      }
      if (x != values(j, i)) {
        throw Error(ErrorCode::kAsymmetricMatrix,
                    "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") differs from its transpose");
      }
    }
  }
  return Graphon(std::move(values));
}

Graphon constant_graphon(double a, int m) {
  require_range(a, "constant value");
  require_resolution(m);
  return Graphon::validate(Matrix::Constant(m, m, a));
}

Graphon embed_graph(const SimpleGraph& graph) {
  const int n = graph.vertex_count;
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one vertex");
  Matrix values = Matrix::Zero(n, n);
  for (auto [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (a == b) throw Error(ErrorCode::kLoopEdge, "graph edge is a loop");
    if (values(a, b) != 0.0) throw Error(ErrorCode::kDuplicateEdge, "graph edge listed twice");
    values(a, b) = values(b, a) = 1.0;
  }
  return Graphon::validate(std::move(values));
}

double edge_density(const Graphon& g) { return kernel::edge_density(g.values()); }

double motif_density(const Graphon& g, const Motif& motif) {
  return kernel::motif_density(g.values(), motif);
}

Matrix motif_gradient(const Graphon& g, const Motif& motif) {
  return kernel::motif_gradient(g.values(), motif);
}

double rate_function(const Graphon& g) { return kernel::rate_function(g.values()); }

Matrix rate_gradient(const Graphon& g) { return kernel::rate_gradient(g.values()); }

BipodalGraphon bipodal_graphon(double c, double p11, double p12, double p22, int m) {
  require_range(c, "split c");
  require_range(p11, "p11");
  require_range(p12, "p12");
  require_range(p22, "p22");
  require_resolution(m);
  const int split_blocks = static_cast<int>(std::lround(c * m));
  Matrix values(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const bool first_i = i < split_blocks;
      const bool first_j = j < split_blocks;
      values(i, j) = first_i && first_j ? p11 : (!first_i && !first_j ? p22 : p12);
    }
  }
  return {Graphon::validate(std::move(values)), split_blocks,
          static_cast<double>(split_blocks) / m};
}

double graphon_distance(const Graphon& f, const Graphon& g, std::span<const Motif> motifs) {
  if (motifs.empty()) throw Error(ErrorCode::kInvalidArgument, "motif list is empty");
  double total = 0.0;
  double weight = 0.5;
  for (const Motif& h : motifs) {
    total += weight * std::abs(motif_density(f, h) - motif_density(g, h));
    weight *= 0.5;
  }
  return total;
}

Graphon resample(const Graphon& g, int new_resolution) {
  require_resolution(new_resolution);
  const int m = g.resolution();
  const int n = new_resolution;
  // Overlap L of old block i and new block I in units of 1/(m n), i.e.
  // [i n, (i+1) n) against [I m, (I+1) m). The averaging weight is n * L / (m n) = L / m.
  Matrix weights = Matrix::Zero(n, m);
  for (int big = 0; big < n; ++big) {
    for (int i = 0; i < m; ++i) {
      const long lo = std::max<long>(static_cast<long>(i) * n, static_cast<long>(big) * m);
      const long hi = std::min<long>(static_cast<long>(i + 1) * n, static_cast<long>(big + 1) * m);
      if (hi > lo) weights(big, i) = static_cast<double>(hi - lo) / m;
    }
  }
  Matrix out = weights * g.values() * weights.transpose();
  // Products of averages can overshoot [0, 1] by an ulp; restore exact symmetry.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double x = std::clamp(out(i, j), 0.0, 1.0);
      out(i, j) = out(j, i) = x;
    }
  }
  return Graphon::validate(std::move(out));
}

Graphon permute_blocks(const Graphon& g, std::span<const int> perm) {
  const int m = g.resolution();
  if (static_cast<int>(perm.size()) != m) {
    throw Error(ErrorCode::kInvalidArgument, "permutation size does not match resolution");
  }
  std::vector<int> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < m; ++i) {
    if (check[i] != i) throw Error(ErrorCode::kInvalidArgument, "not a permutation");
  }
  Matrix out(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out(i, j) = g(perm[i], perm[j]);
  }
  return Graphon::validate(std::move(out));
}

namespace kernel {

double edge_density(const Matrix& v) { return v.mean(); }

double motif_density(const Matrix& v, const Motif& motif) {
  const double m = static_cast<double>(v.rows());
  if (motif.edge_count() == 1) return edge_density(v);
  if (is_triangle(motif)) {
    const Matrix paths = v * v;
    return v.cwiseProduct(paths).sum() / (m * m * m);
  }
  if (star_center(motif) >= 0) {
    const Eigen::VectorXd degree = v.rowwise().mean();
    return degree.array().pow(motif.edge_count()).mean();
  }
  return motif_density_contracted(v, motif);
}

Matrix motif_gradient(const Matrix& v, const Motif& motif) {
  const Eigen::Index m = v.rows();
  if (motif.edge_count() == 1) return Matrix::Ones(m, m);
  if (is_triangle(motif)) return (3.0 / static_cast<double>(m)) * (v * v);
  if (star_center(motif) >= 0) {
    const int k = motif.edge_count();
    const Eigen::VectorXd powered = v.rowwise().mean().array().pow(k - 1);
    Matrix out(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) out(i, j) = 0.5 * k * (powered(i) + powered(j));
    }
    return out;
  }
  return motif_gradient_contracted(v, motif);
}

double rate_function(const Matrix& v) {
  return v.unaryExpr([](double u) { return rate_i0(u); }).mean();
}

Matrix rate_gradient(const Matrix& v) {
  return v.unaryExpr([](double u) { return rate_i0_prime(u); });
}

double motif_density_contracted(const Matrix& v, const Motif& motif) {
  return contract(v, motif, -1, {}).data.front();
}

Matrix motif_gradient_contracted(const Matrix& v, const Motif& motif) {
  const Eigen::Index m = v.rows();
  Matrix out = Matrix::Zero(m, m);
  for (int e = 0; e < motif.edge_count(); ++e) {
    const auto [a, b] = motif.edges()[e];
    // a < b, so data index is x + m * y with x the value of a, y of b.
    const Factor pinned = contract(v, motif, e, {a, b});
    for (Eigen::Index y = 0; y < m; ++y) {
      for (Eigen::Index x = 0; x < m; ++x) {
        const double val = pinned.data[static_cast<std::size_t>(x + m * y)];
        out(x, y) += 0.5 * val;
        out(y, x) += 0.5 * val;
      }
    }
  }
  return out;
}

}  // namespace kernel

}  // namespace graphent
