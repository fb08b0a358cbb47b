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

#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"
#include "graphent/random.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

Matrix symmetric(SplitMix64& rng, int m) { return oracle::random_symmetric(rng, m, 0.0, 1.0); }

TEST(GraphonTest, ValidateRejectsBadMatrices) {
  EXPECT_THROW(Graphon::validate(Matrix(0, 0)), Error);
  EXPECT_THROW(Graphon::validate(Matrix::Constant(2, 3, 0.5)), Error);
  Matrix asym = Matrix::Constant(2, 2, 0.5);
  asym(0, 1) = 0.6;
  EXPECT_THROW(Graphon::validate(asym), Error);
  EXPECT_THROW(Graphon::validate(Matrix::Constant(2, 2, 1.5)), Error);
  EXPECT_NO_THROW(Graphon::validate(Matrix::Constant(3, 3, 1.0)));
}

TEST(GraphonTest, DensitiesMatchBruteForceEnumeration) {
  SplitMix64 rng(11);
  const std::vector<std::pair<int, std::vector<std::pair<int, int>>>> shapes{
      {2, {{0, 1}}},
      {3, {{0, 1}, {1, 2}, {0, 2}}},
      {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {4, {{0, 1}, {0, 2}, {0, 3}}},
      {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}},
      {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}},
  };
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix v = symmetric(rng, rng.uniform_int(1, 5));
    const Graphon g = Graphon::validate(v);
    for (const auto& [ell, edges] : shapes) {
      const Motif motif = Motif::make(ell, edges);
      EXPECT_NEAR(motif_density(g, motif), oracle::hom_density(v, ell, edges), 1e-13);
    }
  }
}

TEST(GraphonTest, StarFastPathMatchesEnumeration) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix v = symmetric(rng, rng.uniform_int(1, 4));
    for (int k = 1; k <= 4; ++k) {
      EXPECT_NEAR(motif_density(Graphon::validate(v), Motif::star(k)), oracle::star_density(v, k), 1e-13);
    }
  }
}

TEST(GraphonTest, GradientMatchesFiniteDifferences) {
  SplitMix64 rng(5);
  const std::vector<Motif> motifs{Motif::triangle(), Motif::star(2), Motif::star(4),
                                  Motif::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})};
  for (const Motif& motif : motifs) {
    for (int trial = 0; trial < 5; ++trial) {
      const int m = rng.uniform_int(2, 5);
      const Matrix v = oracle::random_symmetric(rng, m, 0.1, 0.9);
      const Matrix grad = motif_gradient(Graphon::validate(v), motif);
      for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
          const double h = 1e-6;
          Matrix p = v, q = v;
          p(i, j) += h;
          q(i, j) -= h;
          if (i != j) {
            p(j, i) += h;
            q(j, i) -= h;
          }
          std::vector<std::pair<int, int>> edges(motif.edges().begin(), motif.edges().end());
          const double fd = (oracle::hom_density(p, motif.vertex_count(), edges) -
                             oracle::hom_density(q, motif.vertex_count(), edges)) /
                            (2 * h);
          const double analytic = (i == j ? 1.0 : 2.0) * grad(i, j) / (m * m);
          EXPECT_NEAR(analytic, fd, 1e-8 * std::max(1.0, std::abs(fd))) << motif.name();
        }
      }
    }
  }
}

TEST(GraphonTest, RateFunctionAndGradient) {
  SplitMix64 rng(8);
  const Matrix v = oracle::random_symmetric(rng, 6, 0.05, 0.95);
  const Graphon g = Graphon::validate(v);
  EXPECT_NEAR(rate_function(g), oracle::rate(v), 1e-14);
  const Matrix grad = rate_gradient(g);
  for (int i = 0; i < 6; ++i) EXPECT_NEAR(grad(i, i), oracle::i0_prime(v(i, i)), 1e-12);
  EXPECT_NEAR(rate_function(constant_graphon(0.5, 3)), -0.5 * std::log(2.0), 1e-15);
  EXPECT_TRUE(std::isfinite(rate_function(constant_graphon(0.0, 2))));
}

TEST(GraphonTest, ConstantGraphonHasPowerDensities) {
  const Graphon g = constant_graphon(0.3, 4);
  EXPECT_NEAR(edge_density(g), 0.3, 1e-15);
  EXPECT_NEAR(motif_density(g, Motif::triangle()), 0.027, 1e-15);
  EXPECT_NEAR(motif_density(g, Motif::star(4)), 0.0081, 1e-15);
}

TEST(GraphonTest, EmbeddedGraph) {
  const Graphon g = embed_graph({3, {{0, 1}, {1, 2}, {0, 2}}});
  EXPECT_NEAR(edge_density(g), 6.0 / 9.0, 1e-15);
  EXPECT_NEAR(motif_density(g, Motif::triangle()), 6.0 / 27.0, 1e-15);
  EXPECT_THROW(embed_graph({2, {{0, 0}}}), Error);
  EXPECT_THROW(embed_graph({2, {{0, 1}, {1, 0}}}), Error);
}

TEST(GraphonTest, BipodalGraphonRoundsSplit) {
  const BipodalGraphon b = bipodal_graphon(0.5, 0.2, 0.8, 0.4, 8);
  EXPECT_EQ(b.split_blocks, 4);
  EXPECT_DOUBLE_EQ(b.split, 0.5);
  EXPECT_DOUBLE_EQ(b.graphon(0, 0), 0.2);
  EXPECT_DOUBLE_EQ(b.graphon(0, 7), 0.8);
  EXPECT_DOUBLE_EQ(b.graphon(7, 7), 0.4);
  EXPECT_NEAR(edge_density(b.graphon), 0.25 * 0.2 + 0.5 * 0.8 + 0.25 * 0.4, 1e-15);
}

TEST(GraphonTest, ResampleAndPermuteKeepDensities) {
  SplitMix64 rng(21);
  const Graphon g = Graphon::validate(symmetric(rng, 3));
  const Graphon fine = resample(g, 6);
  EXPECT_NEAR(motif_density(fine, Motif::triangle()), motif_density(g, Motif::triangle()), 1e-14);
  const Graphon coarse = resample(g, 2);
  EXPECT_NEAR(edge_density(coarse), edge_density(g), 1e-14);
  const std::vector<int> perm{2, 0, 1};
  const Graphon p = permute_blocks(g, perm);
  EXPECT_DOUBLE_EQ(p(0, 1), g(2, 0));
  EXPECT_NEAR(motif_density(p, Motif::triangle()), motif_density(g, Motif::triangle()), 1e-14);
}

TEST(GraphonTest, DistanceWeights) {
  const Graphon a = constant_graphon(0.5, 2);
  const Graphon b = constant_graphon(0.6, 2);
  const std::vector<Motif> motifs{Motif::edge(), Motif::triangle()};
  EXPECT_NEAR(graphon_distance(a, b, motifs), 0.5 * 0.1 + 0.25 * (0.216 - 0.125), 1e-14);
  EXPECT_DOUBLE_EQ(graphon_distance(a, a, motifs), 0.0);
}

}  // namespace
}  // namespace graphent
