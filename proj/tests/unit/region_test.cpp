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

#include "graphent/region.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "graphent/error.hpp"

namespace graphent::region {
namespace {

TEST(RegionTest, Curves) {
  EXPECT_DOUBLE_EQ(upper_boundary(0.25), 0.125);
  EXPECT_DOUBLE_EQ(lower_envelope(0.3), 0.0);
  EXPECT_NEAR(lower_envelope(0.75), 0.375, 1e-15);
  EXPECT_DOUBLE_EQ(er_curve(0.5), 0.125);
  EXPECT_DOUBLE_EQ(touch_point(1), 0.5);
  EXPECT_DOUBLE_EQ(touch_point(3), 0.75);
  EXPECT_THROW(upper_boundary(1.5), Error);
}

TEST(RegionTest, Classify) {
  EXPECT_EQ(classify(0.5, 0.125), Position::kOnEr);
  EXPECT_EQ(classify(0.5, 0.2), Position::kAboveEr);
  EXPECT_EQ(classify(0.5, 0.1), Position::kBelowEr);
  EXPECT_EQ(classify(0.5, 0.4), Position::kOutsideUpper);
  EXPECT_EQ(classify(0.8, 0.3), Position::kBelowEnvelope);
  EXPECT_TRUE(is_feasible(classify(0.5, 0.0)));
  EXPECT_FALSE(is_feasible(classify(0.8, 0.3)));
  EXPECT_EQ(to_string(Position::kOnEr), "On_ER");
  EXPECT_THROW(classify(-0.1, 0.0), Error);
}

}  // namespace
}  // namespace graphent::region
