// Copyright 2026 The qlsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

#include "json.hpp"

namespace qlsi {

/// Outcome of one inequality or identity check. The check passes iff
/// gap >= -tol * scale; scale defaults to max(1, |rhs|).
struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tol = 0.0;
  double scale = 1.0;
  bool passed = false;
  std::uint64_t instance_seed = 0;
  std::string instance_descriptor;
  int trial = 0;
};

/// Inequality lhs <= rhs; gap = rhs - lhs.
CheckReport make_inequality(std::string name, double lhs, double rhs, double tol);

/// Identity lhs == rhs; gap = -|lhs - rhs|. With `relative` the scale is
/// |rhs| instead of max(1, |rhs|).
CheckReport make_identity(std::string name, double lhs, double rhs, double tol,
                          bool relative = false);

/// Recomputes `passed` from gap, tol and scale.
void finalize(CheckReport& report);

void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

struct CheckSummary {
  std::string name;
  int passed = 0;
  int failed = 0;
  double worst_gap = 0.0;
};

/// Pass/fail counts per check name, sorted by name.
std::vector<CheckSummary> summarize(const std::vector<CheckReport>& reports);

}  // namespace qlsi
