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

#include <functional>
#include <limits>
#include <span>

#include "qlsi/operator.hpp"

namespace qlsi {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Eigenvalues below -kPsdClampTolerance * lambda_max are treated as a
/// genuine loss of positivity; smaller negative values are roundoff.
inline constexpr double kPsdClampTolerance = 1e-10;

struct Spectrum {
  int qubits = 1;
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // columns

  /// V diag(lambda) V^dagger.
  DenseOperator reconstruct() const;
};

/// Full eigendecomposition of a Hermitian operator.
Spectrum eig_hermitian(const DenseOperator& x);

/// Eigendecomposition of a PSD operator with roundoff-level negative
/// eigenvalues clamped to zero. Throws DomainError if X is not PSD.
Spectrum eig_psd(const DenseOperator& x);

/// True when X is Hermitian and its spectrum passes the clamping rule.
bool is_psd(const DenseOperator& x);

/// Singular values, descending.
Eigen::VectorXd singular_values(const DenseOperator& x);

/// f applied to the spectrum of a Hermitian operator.
DenseOperator hermitian_function(const Spectrum& spec, const std::function<double(double)>& f);

/// X^s for PSD X (0^s = 0 for s > 0).
DenseOperator psd_power(const DenseOperator& x, double s);

/// |X| = sqrt(X^dagger X).
DenseOperator abs_operator(const DenseOperator& x);

/// ||X||_p = tau(|X|^p)^{1/p} for p >= 1. p = kInfinity gives the largest
/// singular value.
double schatten_norm(const DenseOperator& x, double p);

/// Schatten norm from precomputed singular values of a 2^n x 2^n operator.
double schatten_norm_from_singular_values(std::span<const double> sigma, double p);

/// Ent over a list of nonnegative eigenvalues: mean(mu ln mu) - m ln m with
/// m = mean(mu) and 0 ln 0 = 0. An all-zero list has entropy 0.
double entropy_of_values(std::span<const double> mu);

/// Ent(X) = tau(X ln X) - tau(X) ln tau(X) for PSD X != 0.
double entropy(const DenseOperator& x);

/// xi = Ent(X^2) / (n tau(X^2)), in [0, ln 2], for PSD X != 0.
double xi(const DenseOperator& x);

}  // namespace qlsi
