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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qlsi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Largest supported qubit count (matrix side 4096).
inline constexpr int kMaxQubits = 12;

/// Relative tolerance used when an operation requires Hermitian input.
inline constexpr double kHermitianTolerance = 1e-10;

/// A Pauli multi-index s in {0,1,2,3}^n. Qubit 1 is entries()[0] and is the
/// most significant digit of the lexicographic index.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<std::uint8_t> entries);

  /// Parses a digit string such as "0312".
  static MultiIndex parse(std::string_view digits);
  /// Inverse of lex_index().
  static MultiIndex from_lex(int n, std::uint64_t index);

  int qubits() const { return static_cast<int>(entries_.size()); }
  std::span<const std::uint8_t> entries() const { return entries_; }
  std::uint8_t operator[](int j) const { return entries_[j]; }

  /// Number of non-identity factors |s|.
  int weight() const;
  std::uint64_t lex_index() const;
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::uint8_t> entries_;
};

/// An n-qubit operator stored densely as a 2^n x 2^n complex matrix.
/// Qubit 1 is the most significant bit of the row/column index, so the
/// top-level 2x2 block structure of the matrix is the qubit-1 factor.
class DenseOperator {
 public:
  DenseOperator(int n, Matrix entries);

  static DenseOperator identity(int n);
  static DenseOperator zero(int n);
  /// Builds an operator from a square matrix, inferring n from its side.
  static DenseOperator from_matrix(Matrix entries);

  int qubits() const { return n_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  /// Cached Hermiticity, set only when verified at 1e-12 relative.
  std::optional<bool> hermitian_hint() const { return hermitian_hint_; }
  bool is_hermitian(double rel_tol = kHermitianTolerance) const;
  DenseOperator& mark_hermitian();

  DenseOperator adjoint() const;
  /// Largest entry modulus.
  double max_abs() const;

  DenseOperator operator+(const DenseOperator& other) const;
  DenseOperator operator-(const DenseOperator& other) const;
  DenseOperator operator*(const DenseOperator& other) const;
  DenseOperator operator*(Complex scale) const;

 private:
  int n_;
  Matrix entries_;
  std::optional<bool> hermitian_hint_;
};

inline DenseOperator operator*(Complex scale, const DenseOperator& op) { return op * scale; }

/// Fourier coefficients in the Pauli basis, indexed lexicographically.
class PauliCoefficients {
 public:
  PauliCoefficients(int n, std::vector<Complex> coeffs);

  int qubits() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Complex>& values() const { return coeffs_; }
  std::vector<Complex>& values() { return coeffs_; }

  Complex operator[](std::size_t lex) const { return coeffs_[lex]; }
  Complex& operator[](std::size_t lex) { return coeffs_[lex]; }
  Complex at(const MultiIndex& s) const;

  /// Sum of |x_s|^2.
  double squared_norm() const;
  double max_abs() const;

 private:
  int n_;
  std::vector<Complex> coeffs_;
};

/// Checks 1 <= n <= kMaxQubits.
void require_qubits(int n);

/// Weight |s| of every multi-index, in lexicographic order.
std::vector<int> pauli_weights(int n);

/// sigma_{s_1} (x) ... (x) sigma_{s_n}.
DenseOperator pauli_matrix(const MultiIndex& s);

/// tr(X) / 2^n.
Complex normalized_trace(const DenseOperator& x);

/// <X, Y> = tau(X^dagger Y).
Complex hs_inner(const DenseOperator& x, const DenseOperator& y);

/// x_s = <sigma_s, X> for all s, via a per-qubit butterfly in O(n 4^n).
PauliCoefficients pauli_transform(const DenseOperator& x);

/// sum_s c_s sigma_s.
DenseOperator inverse_pauli_transform(const PauliCoefficients& c);

/// Maximum weight carried by a coefficient with |x_s| > threshold. The default
/// threshold is 1e-12 * max_s |x_s|. The zero operator has degree 0.
int degree(const DenseOperator& x, std::optional<double> threshold = std::nullopt);

/// Threshold degree() uses when none is given.
double default_degree_threshold(const PauliCoefficients& c);

/// Number of eigenvalues with |lambda| > tol; default tol is
/// 1e-10 * max |lambda|. Requires Hermitian input.
int numerical_rank(const DenseOperator& x, std::optional<double> tol = std::nullopt);

}  // namespace qlsi
