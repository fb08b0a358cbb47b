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

#include "graphent/phase_analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "graphent/error.hpp"
#include "oracles.hpp"

namespace graphent {
namespace {

ScanSpec small_spec() {
  ScanSpec spec;
  spec.e_grid = {0.5, 0.3};
  spec.t_kind = TGridKind::kOffsets;
  spec.t_values = {1e-3, 1e-2};
  spec.config.m = 8;
  spec.config.multistart_count = 2;
  return spec;
}

TEST(PhaseAnalysisTest, SpecJsonRoundTrip) {
  ScanSpec spec = small_spec();
  spec.motif = Motif::star(2);
  spec.output_path = "out.csv";
  const ScanSpec back = scan_spec_from_json(to_json(spec));
  EXPECT_EQ(back.e_grid, spec.e_grid);
  EXPECT_EQ(back.t_values, spec.t_values);
  EXPECT_EQ(back.motif, spec.motif);
  EXPECT_EQ(back.config.m, 8);
  EXPECT_EQ(back.output_path, "out.csv");
  EXPECT_EQ(to_json(back), to_json(spec));
}

TEST(PhaseAnalysisTest, SpecRejectsBadInput) {
  EXPECT_THROW(scan_spec_from_json({{"version", 2}}), Error);
  nlohmann::json j = to_json(small_spec());
  j["e_grid"] = nlohmann::json::array();
  EXPECT_THROW(scan_spec_from_json(j), Error);
  j = to_json(small_spec());
  j["t_grid"]["kind"] = "polar";
  EXPECT_THROW(scan_spec_from_json(j), Error);
  j = to_json(small_spec());
  j["config"]["bogus"] = 1;
  EXPECT_THROW(scan_spec_from_json(j), Error);
}

TEST(PhaseAnalysisTest, ScanRowsAndRidge) {
  const ScanTable table = phase_diagram_scan(small_spec());
  ASSERT_EQ(table.rows.size(), 10u);
  EXPECT_DOUBLE_EQ(table.rows.front().e, 0.3);
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    if (table.rows[i].e == table.rows[i - 1].e) EXPECT_GT(table.rows[i].t, table.rows[i - 1].t);
  }
  for (const auto& r : table.rows) {
    if (r.status == "infeasible") continue;
    // Constraints hold to 1e-6, so the ceiling can be exceeded by |I0'(e)| 1e-6.
    EXPECT_LE(r.s_value, -oracle::i0(r.e) + 1e-6);
    if (r.e == 0.5 && r.t <= 0.125) EXPECT_NEAR(r.s_value, oracle::half_slice_entropy(r.t), 1e-6);
  }
  for (const auto& c : ridge_check(table)) EXPECT_TRUE(c.holds) << c.e;
}

TEST(PhaseAnalysisTest, ScanIsThreadCountIndependent) {
  ScanSpec spec = small_spec();
  std::ostringstream a, b;
  write_scan_csv(a, phase_diagram_scan(spec));
  spec.config.threads = 3;
  write_scan_csv(b, phase_diagram_scan(spec));
  EXPECT_EQ(a.str(), b.str());
}

TEST(PhaseAnalysisTest, AbsoluteAndRelativeGrids) {
  ScanSpec spec = small_spec();
  spec.e_grid = {0.5};
  spec.t_kind = TGridKind::kAbsolute;
  spec.t_values = {0.1, 0.125, 0.9};
  const ScanTable abs = phase_diagram_scan(spec);
  ASSERT_EQ(abs.rows.size(), 3u);
  EXPECT_EQ(abs.rows[2].status, "infeasible");
  spec.t_kind = TGridKind::kRelativeOffsets;
  spec.t_values = {0.1};
  const ScanTable rel = phase_diagram_scan(spec);
  ASSERT_EQ(rel.rows.size(), 3u);
  EXPECT_NEAR(rel.rows[0].t, 0.1125, 1e-15);
}

TEST(PhaseAnalysisTest, StarCreaseIsOneSided) {
  OptimConfig c;
  c.m = 8;
  c.multistart_count = 2;
  const std::vector<double> offsets{1e-3, 3e-3, 1e-2};
  const CreaseReport r = crease_report({0.5}, Motif::star(4), c, offsets);
  ASSERT_EQ(r.verdicts.size(), 1u);
  EXPECT_EQ(r.verdicts[0].verdict, "one-sided");
  EXPECT_TRUE(std::isfinite(r.verdicts[0].right_derivative));
  EXPECT_FALSE(r.all_detected);
}

}  // namespace
}  // namespace graphent
