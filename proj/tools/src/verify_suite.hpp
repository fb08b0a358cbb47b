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
#include <string>
#include <vector>

namespace graphent::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The invariant suite behind `graphent verify`. Random draws come from
/// per-check streams of `seed`; checks run on `threads` workers and are
/// reported in a fixed order.
std::vector<CheckResult> run_verify_suite(std::uint64_t seed, int threads);

}  // namespace graphent::cli
