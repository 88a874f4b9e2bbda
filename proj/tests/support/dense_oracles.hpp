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

// Slow, dense reference implementations used only to cross-check the library.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qlsi::testing {

using Mat = Eigen::MatrixXcd;

inline Mat single_pauli(int k) {
  const std::complex<double> i(0.0, 1.0);
  Mat m(2, 2);
  switch (k) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// sigma_s for digits s (qubit 1 first, most significant).
inline Mat pauli_string(const std::vector<int>& s) {
  Mat out = Mat::Identity(1, 1);
  for (int k : s) out = kron(out, single_pauli(k));
  return out;
}

/// Digits of the lexicographic index, qubit 1 first.
inline std::vector<int> digits_of(int n, std::size_t index) {
  std::vector<int> s(n);
  for (int j = n - 1; j >= 0; --j) {
    s[j] = static_cast<int>(index % 4);
    index /= 4;
  }
  return s;
}

/// tau(sigma_s X) for every s, by 4^n dense traces.
inline std::vector<std::complex<double>> naive_pauli_transform(int n, const Mat& x) {
  const std::size_t count = std::size_t{1} << (2 * n);
  std::vector<std::complex<double>> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = (pauli_string(digits_of(n, k)) * x).trace() / static_cast<double>(x.rows());
  }
  return out;
}

/// Pauli operator acting as P on qubit j (1-based) and identity elsewhere.
inline Mat embedded_pauli(int n, int j, int k) {
  std::vector<int> s(n, 0);
  s[j - 1] = k;
  return pauli_string(s);
}

/// Replaces qubit j by its maximally mixed average: (1/4) sum_P P_j X P_j.
inline Mat partial_average(int n, int j, const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (int k = 0; k < 4; ++k) {
    const Mat p = embedded_pauli(n, j, k);
    out += p * x * p;
  }
  return out / 4.0;
}

/// Tensor power of the one-qubit depolarizing channel, one factor at a time.
inline Mat dense_depolarize(int n, const Mat& x, double t) {
  const double keep = std::exp(-t);
  Mat out = x;
  for (int j = 1; j <= n; ++j) out = keep * out + (1.0 - keep) * partial_average(n, j, out);
  return out;
}

/// K_n X = sum_j (X - E_j X).
inline Mat dense_generator(int n, const Mat& x) {
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (int j = 1; j <= n; ++j) out += x - partial_average(n, j, x);
  return out;
}

}  // namespace qlsi::testing
