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

#include "qlsi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlsi/errors.hpp"

namespace qlsi {

namespace {

void require_hermitian(const DenseOperator& x, const char* what) {
  if (!x.is_hermitian()) {
    throw DomainError(std::string(what) + " requires a Hermitian operator");
  }
}

double largest_abs(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

DenseOperator Spectrum::reconstruct() const {
  Matrix m = eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  return DenseOperator(qubits, std::move(m));
}

Spectrum eig_hermitian(const DenseOperator& x) {
  require_hermitian(x, "eigendecomposition");
  const Matrix sym = 0.5 * (x.matrix() + x.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver failed to converge");
  }
  return Spectrum{x.qubits(), solver.eigenvalues(), solver.eigenvectors()};
}

Spectrum eig_psd(const DenseOperator& x) {
  Spectrum spec = eig_hermitian(x);
  const double top = std::max(0.0, spec.eigenvalues.maxCoeff());
  for (double& lambda : spec.eigenvalues) {
    if (lambda >= 0.0) continue;
    if (lambda < -kPsdClampTolerance * top || top == 0.0) {
      throw DomainError("operator is not positive semidefinite (eigenvalue " +
                        std::to_string(lambda) + ")");
    }
    lambda = 0.0;
  }
  return spec;
}

bool is_psd(const DenseOperator& x) {
  if (!x.is_hermitian()) return false;
  try {
    eig_psd(x);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

Eigen::VectorXd singular_values(const DenseOperator& x) {
  if (x.is_hermitian()) {
    Eigen::VectorXd s = eig_hermitian(x).eigenvalues.cwiseAbs();
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }
  Eigen::BDCSVD<Matrix> svd(x.matrix());
  return svd.singularValues();
}

DenseOperator hermitian_function(const Spectrum& spec, const std::function<double(double)>& f) {
  Eigen::VectorXd mapped = spec.eigenvalues.unaryExpr(f);
  Matrix m = spec.eigenvectors * mapped.cast<Complex>().asDiagonal() * spec.eigenvectors.adjoint();
  DenseOperator out(spec.qubits, std::move(m));
  return out;
}

DenseOperator psd_power(const DenseOperator& x, double s) {
  return hermitian_function(eig_psd(x), [s](double lambda) {
    return lambda == 0.0 ? (s == 0.0 ? 1.0 : 0.0) : std::pow(lambda, s);
  });
}

DenseOperator abs_operator(const DenseOperator& x) {
  if (x.is_hermitian()) {
    return hermitian_function(eig_hermitian(x), [](double lambda) { return std::abs(lambda); });
  }
  Eigen::BDCSVD<Matrix> svd(x.matrix(), Eigen::ComputeFullV);
  const Matrix& v = svd.matrixV();
  Matrix m = v * svd.singularValues().cast<Complex>().asDiagonal() * v.adjoint();
  return DenseOperator(x.qubits(), std::move(m));
}

double schatten_norm_from_singular_values(std::span<const double> sigma, double p) {
  if (!(p >= 1.0)) throw DomainError("Schatten norm requires p >= 1");
  double top = 0.0;
  for (double s : sigma) top = std::max(top, std::abs(s));
  if (p == kInfinity || top == 0.0) return top;
  // Scale by the top singular value so large p cannot overflow.
  double acc = 0.0;
  for (double s : sigma) acc += std::pow(std::abs(s) / top, p);
  return top * std::pow(acc / static_cast<double>(sigma.size()), 1.0 / p);
}

double schatten_norm(const DenseOperator& x, double p) {
  if (!(p >= 1.0)) throw DomainError("Schatten norm requires p >= 1");
  const Eigen::VectorXd s = singular_values(x);
  return schatten_norm_from_singular_values(std::span<const double>(s.data(), s.size()), p);
}

double entropy_of_values(std::span<const double> mu) {
  if (mu.empty()) return 0.0;
  double mean = 0.0;
  for (double v : mu) mean += v;
  mean /= static_cast<double>(mu.size());
  if (mean <= 0.0) return 0.0;
  // mean(mu ln(mu / m)) equals tau(X ln X) - tau(X) ln tau(X).
  double acc = 0.0;
  for (double v : mu) {
    if (v > 0.0) acc += v * std::log(v / mean);
  }
  return std::max(0.0, acc / static_cast<double>(mu.size()));
}

double entropy(const DenseOperator& x) {
  const Spectrum spec = eig_psd(x);
  if (largest_abs(spec.eigenvalues) == 0.0) throw DomainError("entropy of the zero operator");
  return entropy_of_values(
      std::span<const double>(spec.eigenvalues.data(), spec.eigenvalues.size()));
}

double xi(const DenseOperator& x) {
  const Spectrum spec = eig_psd(x);
  if (largest_abs(spec.eigenvalues) == 0.0) throw DomainError("xi of the zero operator");
  const Eigen::VectorXd squared = spec.eigenvalues.cwiseAbs2();
  const double ent = entropy_of_values(std::span<const double>(squared.data(), squared.size()));
  const double value = ent / (x.qubits() * squared.mean());
  constexpr double kLn2 = std::numbers::ln2;
  if (value > kLn2) {
    if (value > kLn2 + 1e-10) {
      throw NumericalError("xi = " + std::to_string(value) + " exceeds ln 2");
    }
    return kLn2;
  }
  return value;
}

}  // namespace qlsi
