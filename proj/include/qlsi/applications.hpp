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

#include "qlsi/operator.hpp"
#include "qlsi/report.hpp"

#include "json.hpp"

namespace qlsi {

/// 1/2 - sqrt(x (1 - x)) with x = h^{-1}(ln R / n), for 1 <= R <= 2^n.
double faber_krahn_bound(long long rank, int n);

/// Checks faber_krahn_bound(rank(X), n) <= <X, K_n X> / (n tau(X^2)) for PSD X.
CheckReport faber_krahn_check(const DenseOperator& x, double tol = 1e-9);

/// Pi_k: keeps the Pauli components of weight at most k.
DenseOperator low_pass(const DenseOperator& x, int k);

/// 1/2 - sqrt(r1 (1 - r1)) for r1 in (0, 1/2]; r1 = 0 gives the limit 1/2.
double sz_bound(double r1);

/// The comparison bound (ln 2 - h(r1)) / 2.
double mo10_bound(double r1);

struct DegreeRankReport {
  int n = 0;
  long long rank = 0;
  double r1 = 0.0;
  int degree = 0;
  double degree_threshold = 0.0;
  double new_bound = 0.0;   // 1/2 - sqrt(r1 (1 - r1))
  double mo10_bound = 0.0;  // (ln 2 - h(r1)) / 2
  bool new_bound_passed = false;
  bool mo10_bound_passed = false;
  double tol = 0.0;

  double degree_ratio() const { return static_cast<double>(degree) / n; }
  CheckReport as_check() const;
};

void to_json(nlohmann::json& j, const DegreeRankReport& r);

/// Degree-versus-rank check for any X != 0. The rank R is mapped to
/// r1 = h^{-1}(ln R / n); R = 1 uses the limit r1 -> 0.
DegreeRankReport sz_check(const DenseOperator& x, double tol = 1e-9);

}  // namespace qlsi
