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

#include "graphent/svg.hpp"

#include <gtest/gtest.h>

#include "graphent/error.hpp"

namespace graphent {
namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(SvgTest, RegionHasThreeCurves) {
  const std::string svg = render_region(50);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<polyline"), 3);
  EXPECT_EQ(svg, render_region(50));
  EXPECT_THROW(render_region(1), Error);
}

TEST(SvgTest, GraphonBlocks) {
  const std::string svg = render_graphon(bipodal_graphon(0.5, 1.0, 0.0, 1.0, 2).graphon);
  EXPECT_EQ(count(svg, "fill=\"#000000\""), 2);
  EXPECT_EQ(count(svg, "fill=\"#ffffff\""), 2);
}

TEST(SvgTest, EmptyTablesRejected) {
  EXPECT_THROW(render_scan_heatmap(ScanTable{}), Error);
  EXPECT_THROW(render_transition_curve(TransitionCurve{}), Error);
  ScanTable t{.motif_edges = 3};
  t.rows.push_back({.e = 0.5, .t = 0.1, .status = "converged", .s_value = 0.3});
  EXPECT_EQ(count(render_scan_heatmap(t), "<circle"), 1);
}

TEST(SvgTest, TransitionCurve) {
  const TransitionCurve c = transition_curve(1.0, 2.0, 3);
  EXPECT_EQ(count(render_transition_curve(c), "<polyline"), 1);
}

}  // namespace
}  // namespace graphent
