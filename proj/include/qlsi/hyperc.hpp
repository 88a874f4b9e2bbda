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

#include <span>
#include <string>
#include <vector>

#include "qlsi/operator.hpp"
#include "qlsi/report.hpp"

namespace qlsi {

/// Largest admissible r0 for a given p0: (1 - 1/p0) ln 2.
double max_r0_bound(double p0);

struct HcParams {
  double p0 = 2.0;
  double r0 = 0.0;
  double step = 1e-3;    // RK4 step in u-time
  double horizon = 1.0;  // largest t of interest

  /// Throws DomainError unless p0 > 1, 0 <= r0 <= max_r0_bound(p0),
  /// step > 0 and horizon > 0.
  void validate() const;
};

struct ExponentSample {
  double t = 0.0;
  double u = 0.0;   // u(4t)
  double du = 0.0;  // u'(4t), the ODE right-hand side
  double p = 0.0;   // 1 + exp(u(4t))
};

/// Solution of u' = alpha(r0 (1 + e^{-u})), u(0) = ln(p0 - 1), sampled at
/// every RK4 node and reported in t = (u-time) / 4.
class ExponentPath {
 public:
  ExponentPath(HcParams params, std::vector<ExponentSample> samples, double max_clamp_excess);

  const HcParams& params() const { return params_; }
  const std::vector<ExponentSample>& samples() const { return samples_; }

  /// p(t) for t in [0, horizon], cubic Hermite in u-time between samples.
  double p_at(double t) const;
  double u_at(double t) const;

  /// Largest amount by which r0 (1 + e^{-u}) exceeded ln 2 before clamping.
  /// Analytically zero; anything above 1e-9 indicates a problem.
  double max_clamp_excess() const { return max_clamp_excess_; }

  /// CSV with columns t,u,p at 17 significant digits.
  std::string to_csv() const;

 private:
  HcParams params_;
  std::vector<ExponentSample> samples_;
  double max_clamp_excess_;
};

/// max(0, ln(||X||_{p0} / ||X||_1) / n), capped at max_r0_bound(p0).
double max_r0(const DenseOperator& x, double p0);

/// Classical fixed-step RK4 integration of the exponent ODE on [0, 4 horizon].
ExponentPath solve_exponent(const HcParams& params);

/// 1 + (p0 - 1) exp(4 alpha(r0) t).
double weak_exponent(double p0, double r0, double t);

/// 1 + (p0 - 1) exp(2t), the standard hypercontractive exponent.
double standard_exponent(double p0, double t);

/// Checks ||Psi_t X||_{p(t)} <= ||X||_{p0} at each t of a sorted,
/// nonnegative grid. For X that is not PSD the same check also runs on |X|
/// and |X^dagger|, and the factorization bound
/// ||Psi_t X||_q <= ||Psi_t |X^dagger| ||_q^{1/2} ||Psi_t |X| ||_q^{1/2}
/// is reported alongside.
std::vector<CheckReport> hc_check(const DenseOperator& x, double p0, std::span<const double> t_grid,
                                  double tol = 1e-9, double step = 1e-3);

}  // namespace qlsi
