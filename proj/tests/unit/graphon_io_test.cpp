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

#include "graphent/graphon_io.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "graphent/error.hpp"
#include "graphent/random.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

TEST(GraphonIoTest, RoundTripIsExact) {
  SplitMix64 rng(4);
  const Graphon g = Graphon::validate(oracle::random_symmetric(rng, 5, 0.0, 1.0));
  std::stringstream buf;
  write_graphon(buf, g);
  EXPECT_EQ(read_graphon(buf), g);
}

TEST(GraphonIoTest, LowerTriangleWins) {
  std::istringstream in("graphon v1 m=2\n0.5 0.3\n0.3000000000000001 0.1\n");
  const Graphon g = read_graphon(in);
  EXPECT_DOUBLE_EQ(g(0, 1), g(1, 0));
  EXPECT_DOUBLE_EQ(g(0, 1), 0.3000000000000001);
}

TEST(GraphonIoTest, RejectsMalformedInput) {
  std::istringstream asym("graphon v1 m=2\n0.5 0.9\n0.3 0.1\n");
  try {
    read_graphon(asym);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kAsymmetricMatrix);
  }
  std::istringstream header("graphon v2 m=2\n");
  EXPECT_THROW(read_graphon(header), Error);
  std::istringstream short_row("graphon v1 m=2\n0.5\n0.3 0.1\n");
  EXPECT_THROW(read_graphon(short_row), Error);
  std::istringstream range("graphon v1 m=1\n1.5\n");
  EXPECT_THROW(read_graphon(range), Error);
}

TEST(GraphonIoTest, MotifRoundTrip) {
  std::stringstream buf;
  write_motif(buf, Motif::star(3));
  EXPECT_EQ(buf.str(), "motif v1 ell=4\n1 2\n1 3\n1 4\n");
  EXPECT_EQ(read_motif(buf), Motif::star(3));
}

TEST(GraphonIoTest, FormatRealIsShortestRoundTrip) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(0.125), "0.125");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  const double x = 0.33650583350463004;
  EXPECT_EQ(std::stod(format_real(x)), x);
}

}  // namespace
}  // namespace graphent
