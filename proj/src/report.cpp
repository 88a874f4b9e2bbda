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

#include "qlsi/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qlsi {

void finalize(CheckReport& r) {
  r.passed = std::isfinite(r.gap) && r.gap >= -r.tol * r.scale;
}

CheckReport make_inequality(std::string name, double lhs, double rhs, double tol) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.tol = tol;
  r.scale = std::max(1.0, std::abs(rhs));
  finalize(r);
  return r;
}

CheckReport make_identity(std::string name, double lhs, double rhs, double tol, bool relative) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = -std::abs(lhs - rhs);
  r.tol = tol;
  r.scale = relative ? std::max(std::abs(rhs), 1e-300) : std::max(1.0, std::abs(rhs));
  finalize(r);
  return r;
}

void to_json(nlohmann::json& j, const CheckReport& r) {
  j = nlohmann::json{{"name", r.name},
                     {"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"gap", r.gap},
                     {"tol", r.tol},
                     {"scale", r.scale},
                     {"verdict", r.passed ? "pass" : "fail"},
                     {"instance_seed", r.instance_seed},
                     {"instance_descriptor", r.instance_descriptor},
                     {"trial", r.trial}};
}

void from_json(const nlohmann::json& j, CheckReport& r) {
  j.at("name").get_to(r.name);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("gap").get_to(r.gap);
  j.at("tol").get_to(r.tol);
  j.at("scale").get_to(r.scale);
  r.passed = j.at("verdict").get<std::string>() == "pass";
  j.at("instance_seed").get_to(r.instance_seed);
  j.at("instance_descriptor").get_to(r.instance_descriptor);
  j.at("trial").get_to(r.trial);
}

std::vector<CheckSummary> summarize(const std::vector<CheckReport>& reports) {
  std::map<std::string, CheckSummary> by_name;
  for (const auto& r : reports) {
    auto& s = by_name[r.name];
    if (s.name.empty()) {
      s.name = r.name;
      s.worst_gap = r.gap;
    }
    (r.passed ? s.passed : s.failed) += 1;
    s.worst_gap = std::min(s.worst_gap, r.gap);
  }
  std::vector<CheckSummary> out;
  out.reserve(by_name.size());
  for (auto& [name, s] : by_name) out.push_back(s);
  return out;
}

}  // namespace qlsi
