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

#include "qlsi/semigroup.hpp"

#include <cmath>
#include <string>

#include "qlsi/errors.hpp"

namespace qlsi {

DenseOperator lindblad_apply(const DenseOperator& x, int qubit) {
  const int n = x.qubits();
  if (qubit < 1 || qubit > n) {
    throw DomainError("qubit index " + std::to_string(qubit) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  const Eigen::Index bit = Eigen::Index{1} << (n - qubit);
  Matrix out = x.matrix();
  for (Eigen::Index c = 0; c < x.dim(); ++c) {
    if (c & bit) continue;
    for (Eigen::Index r = 0; r < x.dim(); ++r) {
      if (r & bit) continue;
      // Partial average over the target qubit, re-embedded as (.) (x) I.
      const Complex avg = 0.5 * (x(r, c) + x(r | bit, c | bit));
      out(r, c) -= avg;
      out(r | bit, c | bit) -= avg;
    }
  }
  return DenseOperator(n, std::move(out));
}

DenseOperator generator_apply(const DenseOperator& x) {
  PauliCoefficients c = pauli_transform(x);
  const std::vector<int> weights = pauli_weights(x.qubits());
  for (std::size_t idx = 0; idx < c.size(); ++idx) c[idx] *= static_cast<double>(weights[idx]);
  return inverse_pauli_transform(c);
}

DenseOperator depolarize(const DenseOperator& x, double t) {
  if (!(t >= 0.0)) throw DomainError("depolarizing time must be nonnegative");
  if (t > kMaxDepolarizingTime) {
    return DenseOperator::identity(x.qubits()) * normalized_trace(x);
  }
  PauliCoefficients c = pauli_transform(x);
  const std::vector<int> weights = pauli_weights(x.qubits());
  std::vector<double> decay(x.qubits() + 1);
  for (int w = 0; w <= x.qubits(); ++w) decay[w] = std::exp(-t * w);
  for (std::size_t idx = 0; idx < c.size(); ++idx) c[idx] *= decay[weights[idx]];
  return inverse_pauli_transform(c);
}

double dirichlet_form(const DenseOperator& x) {
  const PauliCoefficients c = pauli_transform(x);
  const std::vector<int> weights = pauli_weights(x.qubits());
  double total = 0.0;
  for (std::size_t idx = 0; idx < c.size(); ++idx) total += weights[idx] * std::norm(c[idx]);
  return total;
}

}  // namespace qlsi
