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

namespace qlsi {

/// Below this xi, alpha switches to its series 1/2 + xi/12.
inline constexpr double kAlphaSeriesCutoff = 1e-8;

/// h(s) = -s ln s - (1-s) ln(1-s) on [0, 1].
double binary_entropy(double s);

/// Inverse of h restricted to [0, 1/2], by bisection. Inputs within 1e-12
/// outside [0, ln 2] are clamped.
double binary_entropy_inverse(double y);

/// phi(xi) = 1/2 - sqrt(x (1 - x)) with x = h^{-1}(ln 2 - xi), xi in [0, ln 2].
///
/// Evaluated through r = 1 - 2x, for which ln 2 - h(x) has the closed form
/// G(r) = ((1+r) ln(1+r) + (1-r) ln(1-r)) / 2 and phi = (1 - sqrt(1 - r^2)) / 2.
/// Solving G(r) = xi keeps full relative accuracy as xi -> 0, where the
/// composed form loses all digits to cancellation.
double phi(double xi);

/// alpha(xi) = phi(xi) / xi, with alpha(0) = 1/2. Monotone increasing from
/// 1/2 to 1/(2 ln 2).
double alpha(double xi);

struct LsiReport {
  double xi = 0.0;
  double alpha_xi = 0.0;
  double entropy_sq = 0.0;  // Ent(X^2)
  double lhs = 0.0;         // alpha(xi) Ent(X^2)
  double rhs = 0.0;         // <X, K_n X>
  double gap = 0.0;         // rhs - lhs
  double classical_lhs = 0.0;  // Ent(X^2) / 2
  double tol = 0.0;
  bool passed = false;

  CheckReport as_check() const;
};

/// Improved log-Sobolev inequality alpha(xi) Ent(X^2) <= <X, K_n X> for PSD X.
/// Passes iff rhs >= lhs - tol * max(1, |rhs|).
LsiReport lsi_check(const DenseOperator& x, double tol = 1e-9);

struct ModifiedLsiReport {
  CheckReport inequality;          // 4 alpha(xi) Ent(X^2) <= <ln X^2, K_n X^2>
  CheckReport stroock_varopoulos;  // <X, K_n X> <= <ln X^2, K_n X^2> / 4
};

/// Modified log-Sobolev inequality for positive definite X.
ModifiedLsiReport modified_lsi_check(const DenseOperator& x, double tol = 1e-9);

}  // namespace qlsi
