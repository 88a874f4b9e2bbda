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

namespace qlsi {

/// Times beyond this are replaced by the t -> infinity limit tau(X) I.
inline constexpr double kMaxDepolarizingTime = 700.0;

/// Single-qubit Lindblad generator L(X) = X - tau(X) I acting on qubit
/// `qubit` (1-based, qubit 1 most significant), identity elsewhere.
DenseOperator lindblad_apply(const DenseOperator& x, int qubit);

/// K_n X = sum_i L_i X, evaluated in the Pauli domain where K_n multiplies
/// x_s by |s|.
DenseOperator generator_apply(const DenseOperator& x);

/// Psi_t^{(x)n}(X): scales x_s by exp(-t |s|). Requires t >= 0.
DenseOperator depolarize(const DenseOperator& x, double t);

/// <X, K_n X> = sum_s |s| |x_s|^2.
double dirichlet_form(const DenseOperator& x);

}  // namespace qlsi
