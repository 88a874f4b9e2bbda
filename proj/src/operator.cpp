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

#include "qlsi/operator.hpp"

#include <algorithm>
#include <cmath>

#include "qlsi/errors.hpp"
#include "qlsi/spectral.hpp"

namespace qlsi {

namespace {

std::uint64_t pow4(int n) { return std::uint64_t{1} << (2 * n); }

// Spreads the bits of v so that bit k lands on bit 2k.
std::uint64_t spread_bits(std::uint64_t v) {
  std::uint64_t out = 0;
  for (int k = 0; v != 0; ++k, v >>= 1) out |= (v & 1u) << (2 * k);
  return out;
}

// Index of entry (r, c) in the interleaved layout where the base-4 digit of
// each qubit is 2 * r_bit + c_bit.
std::uint64_t interleave(std::uint64_t r, std::uint64_t c) {
  return (spread_bits(r) << 1) | spread_bits(c);
}

}  // namespace

void require_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw DomainError("qubit count " + std::to_string(n) + " outside [1, " +
                      std::to_string(kMaxQubits) + "]");
  }
}

MultiIndex::MultiIndex(std::vector<std::uint8_t> entries) : entries_(std::move(entries)) {
  require_qubits(static_cast<int>(entries_.size()));
  for (auto e : entries_) {
    if (e > 3) throw DomainError("Pauli symbol must be in {0,1,2,3}");
  }
}

MultiIndex MultiIndex::parse(std::string_view digits) {
  std::vector<std::uint8_t> entries;
  entries.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '3') {
      throw DomainError("invalid Pauli symbol '" + std::string(1, ch) + "'");
    }
    entries.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return MultiIndex(std::move(entries));
}

MultiIndex MultiIndex::from_lex(int n, std::uint64_t index) {
  require_qubits(n);
  if (index >= pow4(n)) throw DomainError("lexicographic index out of range");
  std::vector<std::uint8_t> entries(n);
  for (int j = n - 1; j >= 0; --j) {
    entries[j] = static_cast<std::uint8_t>(index & 3u);
    index >>= 2;
  }
  return MultiIndex(std::move(entries));
}

int MultiIndex::weight() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](std::uint8_t e) { return e != 0; }));
}

std::uint64_t MultiIndex::lex_index() const {
  std::uint64_t index = 0;
  for (auto e : entries_) index = (index << 2) | e;
  return index;
}

std::string MultiIndex::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (auto e : entries_) out.push_back(static_cast<char>('0' + e));
  return out;
}

DenseOperator::DenseOperator(int n, Matrix entries) : n_(n), entries_(std::move(entries)) {
  require_qubits(n);
  const Eigen::Index side = Eigen::Index{1} << n;
  if (entries_.rows() != side || entries_.cols() != side) {
    throw DomainError("operator on " + std::to_string(n) + " qubits must be " +
                      std::to_string(side) + "x" + std::to_string(side));
  }
}

DenseOperator DenseOperator::identity(int n) {
  require_qubits(n);
  const Eigen::Index side = Eigen::Index{1} << n;
  DenseOperator out(n, Matrix::Identity(side, side));
  out.hermitian_hint_ = true;
  return out;
}

DenseOperator DenseOperator::zero(int n) {
  require_qubits(n);
  const Eigen::Index side = Eigen::Index{1} << n;
  DenseOperator out(n, Matrix::Zero(side, side));
  out.hermitian_hint_ = true;
  return out;
}

DenseOperator DenseOperator::from_matrix(Matrix entries) {
  const Eigen::Index side = entries.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < side && n <= kMaxQubits) ++n;
  if ((Eigen::Index{1} << n) != side) {
    throw DomainError("matrix side " + std::to_string(side) + " is not a power of two");
  }
  return DenseOperator(n, std::move(entries));
}

bool DenseOperator::is_hermitian(double rel_tol) const {
  if (hermitian_hint_ && *hermitian_hint_) return true;
  const double scale = max_abs();
  if (scale == 0.0) return true;
  const double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  return defect <= rel_tol * scale;
}

DenseOperator& DenseOperator::mark_hermitian() {
  hermitian_hint_ = is_hermitian(1e-12);
  return *this;
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator out(n_, entries_.adjoint());
  out.hermitian_hint_ = hermitian_hint_;
  return out;
}

double DenseOperator::max_abs() const {
  return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
}

DenseOperator DenseOperator::operator+(const DenseOperator& other) const {
  if (other.n_ != n_) throw DomainError("qubit count mismatch");
  return DenseOperator(n_, entries_ + other.entries_);
}

DenseOperator DenseOperator::operator-(const DenseOperator& other) const {
  if (other.n_ != n_) throw DomainError("qubit count mismatch");
  return DenseOperator(n_, entries_ - other.entries_);
}

DenseOperator DenseOperator::operator*(const DenseOperator& other) const {
  if (other.n_ != n_) throw DomainError("qubit count mismatch");
  return DenseOperator(n_, entries_ * other.entries_);
}

DenseOperator DenseOperator::operator*(Complex scale) const {
  return DenseOperator(n_, entries_ * scale);
}

PauliCoefficients::PauliCoefficients(int n, std::vector<Complex> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  require_qubits(n);
  if (coeffs_.size() != pow4(n)) {
    throw DomainError("expected 4^" + std::to_string(n) + " Pauli coefficients");
  }
}

Complex PauliCoefficients::at(const MultiIndex& s) const {
  if (s.qubits() != n_) throw DomainError("multi-index length mismatch");
  return coeffs_[s.lex_index()];
}

double PauliCoefficients::squared_norm() const {
  double total = 0.0;
  for (const auto& c : coeffs_) total += std::norm(c);
  return total;
}

double PauliCoefficients::max_abs() const {
  double best = 0.0;
  for (const auto& c : coeffs_) best = std::max(best, std::abs(c));
  return best;
}

std::vector<int> pauli_weights(int n) {
  require_qubits(n);
  std::vector<int> weights(pow4(n));
  for (std::uint64_t idx = 0; idx < weights.size(); ++idx) {
    int w = 0;
    for (std::uint64_t v = idx; v != 0; v >>= 2) w += (v & 3u) != 0;
    weights[idx] = w;
  }
  return weights;
}

DenseOperator pauli_matrix(const MultiIndex& s) {
  static const Matrix kPauli[4] = {
      (Matrix(2, 2) << 1, 0, 0, 1).finished(),
      (Matrix(2, 2) << 0, 1, 1, 0).finished(),
      (Matrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  Matrix out = kPauli[s[0]];
  for (int j = 1; j < s.qubits(); ++j) {
    const Matrix& f = kPauli[s[j]];
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < 2; ++r) {
      for (Eigen::Index c = 0; c < 2; ++c) {
        // Kronecker product out (x) f: f varies fastest.
        for (Eigen::Index i = 0; i < out.rows(); ++i) {
          for (Eigen::Index k = 0; k < out.cols(); ++k) {
            next(2 * i + r, 2 * k + c) = out(i, k) * f(r, c);
          }
        }
      }
    }
    out = std::move(next);
  }
  DenseOperator op(s.qubits(), std::move(out));
  op.mark_hermitian();
  return op;
}

Complex normalized_trace(const DenseOperator& x) {
  return x.matrix().trace() / static_cast<double>(x.dim());
}

Complex hs_inner(const DenseOperator& x, const DenseOperator& y) {
  if (x.qubits() != y.qubits()) throw DomainError("qubit count mismatch in inner product");
  // tau(X^dagger Y) = 2^-n sum_{ij} conj(X_ij) Y_ij
  return x.matrix().conjugate().cwiseProduct(y.matrix()).sum() / static_cast<double>(x.dim());
}

PauliCoefficients pauli_transform(const DenseOperator& x) {
  const int n = x.qubits();
  const std::uint64_t side = std::uint64_t{1} << n;
  std::vector<Complex> d(pow4(n));
  for (std::uint64_t c = 0; c < side; ++c) {
    for (std::uint64_t r = 0; r < side; ++r) {
      d[interleave(r, c)] = x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  const Complex i_half(0.0, 0.5);
  for (std::uint64_t stride = 1; stride < d.size(); stride *= 4) {
    for (std::uint64_t block = 0; block < d.size(); block += 4 * stride) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        Complex* p = d.data() + block + off;
        const Complex d00 = p[0], d01 = p[stride], d10 = p[2 * stride], d11 = p[3 * stride];
        p[0] = 0.5 * (d00 + d11);
        p[stride] = 0.5 * (d01 + d10);
        p[2 * stride] = i_half * (d01 - d10);
        p[3 * stride] = 0.5 * (d00 - d11);
      }
    }
  }
  return PauliCoefficients(n, std::move(d));
}

DenseOperator inverse_pauli_transform(const PauliCoefficients& coeffs) {
  const int n = coeffs.qubits();
  std::vector<Complex> d = coeffs.values();
  const Complex i(0.0, 1.0);
  for (std::uint64_t stride = 1; stride < d.size(); stride *= 4) {
    for (std::uint64_t block = 0; block < d.size(); block += 4 * stride) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        Complex* p = d.data() + block + off;
        const Complex c0 = p[0], c1 = p[stride], c2 = p[2 * stride], c3 = p[3 * stride];
        p[0] = c0 + c3;
        p[stride] = c1 - i * c2;
        p[2 * stride] = c1 + i * c2;
        p[3 * stride] = c0 - c3;
      }
    }
  }
  const std::uint64_t side = std::uint64_t{1} << n;
  Matrix out(static_cast<Eigen::Index>(side), static_cast<Eigen::Index>(side));
  for (std::uint64_t c = 0; c < side; ++c) {
    for (std::uint64_t r = 0; r < side; ++r) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = d[interleave(r, c)];
    }
  }
  return DenseOperator(n, std::move(out));
}

double default_degree_threshold(const PauliCoefficients& c) { return 1e-12 * c.max_abs(); }

int degree(const DenseOperator& x, std::optional<double> threshold) {
  const PauliCoefficients c = pauli_transform(x);
  const double cut = threshold.value_or(default_degree_threshold(c));
  if (cut < 0.0) throw DomainError("degree threshold must be nonnegative");
  const std::vector<int> weights = pauli_weights(x.qubits());
  int best = 0;
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (std::abs(c[idx]) > cut) best = std::max(best, weights[idx]);
  }
  return best;
}

int numerical_rank(const DenseOperator& x, std::optional<double> tol) {
  const Spectrum spec = eig_hermitian(x);
  const double largest = spec.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = tol.value_or(1e-10 * largest);
  if (cut < 0.0) throw DomainError("rank tolerance must be nonnegative");
  int rank = 0;
  for (double lambda : spec.eigenvalues) rank += std::abs(lambda) > cut;
  return rank;
}

}  // namespace qlsi
