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

#include "qlsi/applications.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlsi/errors.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/sobolev.hpp"
#include "qlsi/spectral.hpp"

namespace qlsi {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// 1/2 - sqrt(x (1 - x)) = (1/2 - x)^2 / (1/2 + sqrt(x (1 - x))).
double half_minus_root(double x) {
  const double d = 0.5 - x;
  return d * d / (0.5 + std::sqrt(x * (1.0 - x)));
}

long long singular_rank(const DenseOperator& x) {
  if (x.is_hermitian()) return numerical_rank(x);
  const Eigen::VectorXd s = singular_values(x);
  const double cut = 1e-10 * s.maxCoeff();
  return static_cast<long long>((s.array() > cut).count());
}

}  // namespace

double faber_krahn_bound(long long rank, int n) {
  require_qubits(n);
  const long long full = 1LL << n;
  if (rank < 1 || rank > full) {
    throw DomainError("rank " + std::to_string(rank) + " outside [1, 2^n]");
  }
  if (rank == full) return 0.0;
  if (rank == 1) return 0.5;
  return half_minus_root(binary_entropy_inverse(std::log(static_cast<double>(rank)) / n));
}

CheckReport faber_krahn_check(const DenseOperator& x, double tol) {
  if (!is_psd(x)) throw DomainError("Faber-Krahn check requires a PSD operator");
  const double tau_sq = hs_inner(x, x).real();
  if (tau_sq == 0.0) throw DomainError("Faber-Krahn check of the zero operator");
  const int rank = numerical_rank(x);
  const int n = x.qubits();
  CheckReport r = make_inequality("theorem3_faber_krahn", faber_krahn_bound(rank, n),
                                  dirichlet_form(x) / (n * tau_sq), tol);
  r.instance_descriptor = "rank=" + std::to_string(rank);
  return r;
}

DenseOperator low_pass(const DenseOperator& x, int k) {
  if (k < 0 || k > x.qubits()) throw DomainError("low-pass cutoff outside [0, n]");
  PauliCoefficients c = pauli_transform(x);
  const std::vector<int> weights = pauli_weights(x.qubits());
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (weights[idx] > k) c[idx] = 0.0;
  }
  return inverse_pauli_transform(c);
}

double sz_bound(double r1) {
  if (!(r1 >= 0.0 && r1 <= 0.5)) throw DomainError("r1 outside (0, 1/2]");
  return half_minus_root(r1);
}

double mo10_bound(double r1) {
  if (!(r1 >= 0.0 && r1 <= 0.5)) throw DomainError("r1 outside (0, 1/2]");
  return 0.5 * (kLn2 - binary_entropy(r1));
}

CheckReport DegreeRankReport::as_check() const {
  CheckReport r = make_inequality("theorem4_schwartz_zippel", new_bound, degree_ratio(), tol);
  r.instance_descriptor = "rank=" + std::to_string(rank) + ";degree=" + std::to_string(degree) +
                          ";r1=" + std::to_string(r1);
  return r;
}

void to_json(nlohmann::json& j, const DegreeRankReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"rank", r.rank},
                     {"r1", r.r1},
                     {"degree", r.degree},
                     {"degree_threshold", r.degree_threshold},
                     {"degree_ratio", r.degree_ratio()},
                     {"new_bound", r.new_bound},
                     {"mo10_bound", r.mo10_bound},
                     {"new_bound_verdict", r.new_bound_passed ? "pass" : "fail"},
                     {"mo10_bound_verdict", r.mo10_bound_passed ? "pass" : "fail"},
                     {"tol", r.tol}};
}

DegreeRankReport sz_check(const DenseOperator& x, double tol) {
  if (x.max_abs() == 0.0) throw DomainError("degree-rank check of the zero operator");
  DegreeRankReport rep;
  rep.n = x.qubits();
  rep.tol = tol;
  rep.rank = singular_rank(x);
  rep.r1 = rep.rank == 1 ? 0.0
                         : binary_entropy_inverse(std::log(static_cast<double>(rep.rank)) / rep.n);
  const PauliCoefficients c = pauli_transform(x);
  rep.degree_threshold = default_degree_threshold(c);
  rep.degree = degree(x, rep.degree_threshold);
  rep.new_bound = sz_bound(rep.r1);
  rep.mo10_bound = mo10_bound(rep.r1);
  rep.new_bound_passed = rep.degree_ratio() >= rep.new_bound - tol;
  rep.mo10_bound_passed = rep.degree_ratio() >= rep.mo10_bound - tol;
  return rep;
}

}  // namespace qlsi
