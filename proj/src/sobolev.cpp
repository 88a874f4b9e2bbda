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

#include "qlsi/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qlsi/errors.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/spectral.hpp"

namespace qlsi {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kDomainSlack = 1e-12;

// G(r) = ln 2 - h((1 - r) / 2).
double entropy_deficit(double r) {
  if (r >= 1.0) return kLn2;
  if (r < 0.1) {
    // sum_k r^{2k} / (2k (2k - 1))
    const double r2 = r * r;
    double term = r2, total = 0.0;
    for (int k = 1; k <= 14; ++k) {
      total += term / (2.0 * k * (2.0 * k - 1.0));
      term *= r2;
    }
    return total;
  }
  return 0.5 * ((1.0 + r) * std::log1p(r) + (1.0 - r) * std::log1p(-r));
}

// Solves G(r) = xi on [0, 1]. G is increasing and convex, so Newton started
// to the right of the root decreases monotonically onto it.
double radius_from_xi(double xi) {
  if (xi <= 0.0) return 0.0;
  if (xi >= kLn2) return 1.0;
  // G(r) >= r^2 / 2 puts the root below sqrt(2 xi).
  double r = std::min(std::sqrt(2.0 * xi), 1.0 - 1e-15);
  for (int iter = 0; iter < 100; ++iter) {
    const double excess = entropy_deficit(r) - xi;
    if (excess <= 0.0) break;
    const double step = excess / std::atanh(r);
    const double next = r - step;
    if (!(next < r)) break;
    r = next;
    if (step <= 1e-17 * r) break;
  }
  return r;
}

double clamp_xi(double xi, const char* what) {
  if (!(xi >= -kDomainSlack && xi <= kLn2 + kDomainSlack)) {
    throw DomainError(std::string(what) + ": xi = " + std::to_string(xi) +
                      " outside [0, ln 2]");
  }
  return std::clamp(xi, 0.0, kLn2);
}

}  // namespace

double binary_entropy(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("binary entropy argument outside [0, 1]");
  double total = 0.0;
  if (s > 0.0) total -= s * std::log(s);
  if (s < 1.0) total -= (1.0 - s) * std::log1p(-s);
  return total;
}

double binary_entropy_inverse(double y) {
  if (!(y >= -kDomainSlack && y <= kLn2 + kDomainSlack)) {
    throw DomainError("inverse binary entropy argument outside [0, ln 2]");
  }
  y = std::clamp(y, 0.0, kLn2);
  if (y == 0.0) return 0.0;
  if (y == kLn2) return 0.5;
  double lo = 0.0, hi = 0.5;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (binary_entropy(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double phi(double xi) {
  const double r = radius_from_xi(clamp_xi(xi, "phi"));
  // (1 - sqrt(1 - r^2)) / 2 without cancellation.
  return 0.5 * r * r / (1.0 + std::sqrt((1.0 - r) * (1.0 + r)));
}

double alpha(double xi) {
  xi = clamp_xi(xi, "alpha");
  if (xi == 0.0) return 0.5;
  if (xi < kAlphaSeriesCutoff) return 0.5 + xi / 12.0;
  return phi(xi) / xi;
}

CheckReport LsiReport::as_check() const {
  CheckReport r = make_inequality("theorem1_lsi", lhs, rhs, tol);
  return r;
}

LsiReport lsi_check(const DenseOperator& x, double tol) {
  const Spectrum spec = eig_psd(x);
  if (spec.eigenvalues.cwiseAbs().maxCoeff() == 0.0) {
    throw DomainError("log-Sobolev check of the zero operator");
  }
  const Eigen::VectorXd squared = spec.eigenvalues.cwiseAbs2();
  LsiReport rep;
  rep.entropy_sq = entropy_of_values(std::span<const double>(squared.data(), squared.size()));
  rep.xi = clamp_xi(rep.entropy_sq / (x.qubits() * squared.mean()), "lsi_check");
  rep.alpha_xi = alpha(rep.xi);
  rep.lhs = rep.alpha_xi * rep.entropy_sq;
  rep.rhs = dirichlet_form(x);
  rep.gap = rep.rhs - rep.lhs;
  rep.classical_lhs = 0.5 * rep.entropy_sq;
  rep.tol = tol;
  rep.passed = rep.gap >= -tol * std::max(1.0, std::abs(rep.rhs));
  return rep;
}

ModifiedLsiReport modified_lsi_check(const DenseOperator& x, double tol) {
  const Spectrum spec = eig_psd(x);
  const double top = spec.eigenvalues.maxCoeff();
  if (!(spec.eigenvalues.minCoeff() > 1e-12 * top)) {
    throw DomainError("modified log-Sobolev check requires a positive definite operator");
  }
  const DenseOperator x_sq = hermitian_function(spec, [](double l) { return l * l; });
  const DenseOperator log_x_sq =
      hermitian_function(spec, [](double l) { return 2.0 * std::log(l); });
  const double energy = hs_inner(log_x_sq, generator_apply(x_sq)).real();

  const Eigen::VectorXd squared = spec.eigenvalues.cwiseAbs2();
  const double ent = entropy_of_values(std::span<const double>(squared.data(), squared.size()));
  const double xi_value = clamp_xi(ent / (x.qubits() * squared.mean()), "modified_lsi_check");

  ModifiedLsiReport rep;
  rep.inequality = make_inequality("modified_lsi", 4.0 * alpha(xi_value) * ent, energy, tol);
  rep.stroock_varopoulos =
      make_inequality("modified_lsi_stroock_varopoulos", dirichlet_form(x), 0.25 * energy, tol);
  return rep;
}

}  // namespace qlsi
