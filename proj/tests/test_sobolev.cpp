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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qlsi/errors.hpp"
#include "qlsi/harness.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/sobolev.hpp"
#include "qlsi/spectral.hpp"

namespace qlsi {
namespace {

constexpr double kLn2 = std::numbers::ln2;

// Reference values from tests/oracles/scalar_oracles.py (mpmath, 30 digits).
constexpr double kH011 = 0.34651533691866615209;
constexpr double kHInvHalf = 0.19970990255397719459;
constexpr double kPhi03 = 0.15979300538704873244;
constexpr double kAlpha03 = 0.53264335129016244146;
constexpr double kAlpha1em6 = 0.5000000833333944445;
constexpr double kAlpha1em3 = 0.50008339449932747084;
constexpr double kAlpha06 = 0.60724503292279393046;
constexpr double kAlphaLn2 = 0.72134752044448170368;

DenseOperator diag1(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return DenseOperator(1, m);
}

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), kLn2, 1e-16);
  EXPECT_NEAR(binary_entropy(0.11), kH011, 1e-15);
  for (double s : {0.01, 0.2, 0.37}) EXPECT_NEAR(binary_entropy(s), binary_entropy(1 - s), 1e-15);
  EXPECT_THROW(binary_entropy(-0.1), DomainError);
  EXPECT_THROW(binary_entropy(1.1), DomainError);
}

TEST(BinaryEntropyInverse, Examples) {
  EXPECT_EQ(binary_entropy_inverse(0.0), 0.0);
  EXPECT_EQ(binary_entropy_inverse(kLn2), 0.5);
  EXPECT_NEAR(binary_entropy_inverse(0.5), kHInvHalf, 1e-15);
  EXPECT_EQ(binary_entropy_inverse(-1e-13), 0.0);
  EXPECT_EQ(binary_entropy_inverse(kLn2 + 1e-13), 0.5);
  EXPECT_THROW(binary_entropy_inverse(-1e-6), DomainError);
  EXPECT_THROW(binary_entropy_inverse(0.7), DomainError);
}

TEST(BinaryEntropyInverse, RoundTripAcrossRange) {
  for (int i = 0; i <= 10000; ++i) {
    const double y = kLn2 * i / 10000.0;
    const double x = binary_entropy_inverse(y);
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 0.5);
    EXPECT_NEAR(binary_entropy(x), y, 1e-13) << "y=" << y;
  }
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi(0.0), 0.0);
  EXPECT_NEAR(phi(kLn2), 0.5, 1e-15);
  EXPECT_NEAR(phi(0.3), kPhi03, 1e-14);
  EXPECT_THROW(phi(-0.01), DomainError);
  EXPECT_THROW(phi(0.7), DomainError);
}

TEST(Phi, MatchesComposedFormula) {
  for (double v : {1e-4, 0.01, 0.1, 0.3, 0.5, 0.69}) {
    const double x = binary_entropy_inverse(kLn2 - v);
    EXPECT_NEAR(phi(v), 0.5 - std::sqrt(x * (1 - x)), 1e-12) << "xi=" << v;
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(0.0), 0.5);
  EXPECT_NEAR(alpha(kLn2), kAlphaLn2, 1e-15);
  EXPECT_NEAR(alpha(0.3), kAlpha03, 1e-14);
  EXPECT_NEAR(alpha(0.6), kAlpha06, 1e-14);
  EXPECT_NEAR(alpha(1e-3), kAlpha1em3, 1e-14);
  EXPECT_NEAR(alpha(1e-6), kAlpha1em6, 1e-14);
  EXPECT_THROW(alpha(0.8), DomainError);
}

TEST(Alpha, ContinuousAcrossSeriesCutoff) {
  const double below = alpha(kAlphaSeriesCutoff * (1 - 1e-9));
  const double above = alpha(kAlphaSeriesCutoff * (1 + 1e-9));
  EXPECT_NEAR(below, above, 1e-14);
  EXPECT_NEAR(alpha(1e-12), 0.5, 1e-12);
}

TEST(Alpha, BoundedBelowAndMonotoneOnGrid) {
  double prev = 0.5;
  for (int i = 0; i <= 10000; ++i) {
    const double a = alpha(kLn2 * i / 10000.0);
    EXPECT_GE(a, 0.5);
    EXPECT_LE(a, kAlphaLn2 + 1e-15);
    EXPECT_GE(a, prev - 1e-15);
    prev = a;
  }
}

TEST(Phi, ConvexOnGrid) {
  const double h = 1e-3;
  const int steps = static_cast<int>(kLn2 / h);
  for (int i = 1; i < steps; ++i) {
    const double x = i * h;
    EXPECT_GE(phi(x + h) - 2 * phi(x) + phi(x - h), -1e-9) << "xi=" << x;
  }
}

TEST(LsiCheck, TightOnProducts) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DenseOperator rho = gen_random_psd(1, seed);
    for (int n = 1; n <= 4; ++n) {
      const LsiReport rep = lsi_check(gen_product(rho, n));
      EXPECT_NEAR(rep.gap, 0.0, 1e-8 * std::max(1.0, rep.rhs)) << "n=" << n;
      EXPECT_TRUE(rep.passed);
    }
  }
}

TEST(LsiCheck, PureStateWorkedExample) {
  const LsiReport rep = lsi_check(gen_psi_s(0.5));
  EXPECT_NEAR(rep.xi, kLn2, 1e-12);
  EXPECT_NEAR(rep.lhs, 0.25, 1e-12);
  EXPECT_NEAR(rep.rhs, 0.375, 1e-12);
  EXPECT_NEAR(rep.gap, 0.125, 1e-12);
  EXPECT_NEAR(rep.classical_lhs, 0.5 * 0.5 * kLn2, 1e-12);
  EXPECT_TRUE(rep.passed);
}

TEST(LsiCheck, SingleQubitEquality) {
  for (double r : {0.0, 0.1, 0.5, 0.9, 0.999}) {
    const LsiReport rep = lsi_check(diag1(std::sqrt(1 + r), std::sqrt(1 - r)));
    const double expected = 0.5 * (1 - std::sqrt(1 - r * r));
    EXPECT_NEAR(rep.lhs, expected, 1e-10) << "r=" << r;
    EXPECT_NEAR(rep.rhs, expected, 1e-10) << "r=" << r;
  }
}

TEST(LsiCheck, RandomInstancesPassAndImproveOnClassical) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const int rank = 1 + static_cast<int>(seed % (1u << n));
      const LsiReport rep = lsi_check(gen_known_rank_psd(n, rank, 1000 * n + seed));
      EXPECT_TRUE(rep.passed) << "n=" << n << " seed=" << seed << " gap=" << rep.gap;
      EXPECT_GE(rep.lhs, rep.classical_lhs - 1e-12);
      EXPECT_TRUE(rep.as_check().passed);
    }
  }
}

TEST(LsiCheck, RejectsNonPsdAndZero) {
  EXPECT_THROW(lsi_check(pauli_matrix(MultiIndex::parse("3"))), DomainError);
  EXPECT_THROW(lsi_check(DenseOperator::zero(2)), DomainError);
}

TEST(ModifiedLsi, ClosedFormTwoByTwo) {
  const ModifiedLsiReport rep = modified_lsi_check(diag1(1.1, 0.9));
  EXPECT_NEAR(rep.inequality.lhs, 0.04, 1e-14);
  EXPECT_NEAR(rep.inequality.rhs, 0.040134139092430232254, 1e-14);
  EXPECT_TRUE(rep.inequality.passed);
  EXPECT_NEAR(rep.stroock_varopoulos.lhs, 0.01, 1e-15);
  EXPECT_NEAR(rep.stroock_varopoulos.rhs, 0.25 * 0.040134139092430232254, 1e-14);
  EXPECT_TRUE(rep.stroock_varopoulos.passed);
}

TEST(ModifiedLsi, ProductsIdentityAndRandom) {
  const ModifiedLsiReport prod = modified_lsi_check(gen_product(diag1(0.9, 0.4), 2));
  EXPECT_TRUE(prod.inequality.passed);
  EXPECT_TRUE(prod.stroock_varopoulos.passed);
  const ModifiedLsiReport id = modified_lsi_check(DenseOperator::identity(2));
  EXPECT_NEAR(id.inequality.lhs, 0.0, 1e-15);
  EXPECT_NEAR(id.inequality.rhs, 0.0, 1e-15);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ModifiedLsiReport rep = modified_lsi_check(gen_random_psd(1 + seed % 3, seed));
    EXPECT_TRUE(rep.inequality.passed) << seed;
    EXPECT_TRUE(rep.stroock_varopoulos.passed) << seed;
  }
  EXPECT_THROW(modified_lsi_check(gen_known_rank_psd(2, 2, 1)), DomainError);
}

}  // namespace
}  // namespace qlsi
