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
#include <complex>

#include <gtest/gtest.h>

#include "qlsi/errors.hpp"
#include "qlsi/harness.hpp"
#include "qlsi/operator.hpp"
#include "support/dense_oracles.hpp"

namespace qlsi {
namespace {

using testing::Mat;

double max_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

TEST(MultiIndex, ParseWeightAndLexRoundTrip) {
  const MultiIndex s = MultiIndex::parse("0312");
  EXPECT_EQ(s.qubits(), 4);
  EXPECT_EQ(s.weight(), 3);
  EXPECT_EQ(s.lex_index(), 0u * 64 + 3u * 16 + 1u * 4 + 2u);
  EXPECT_EQ(s.to_string(), "0312");
  for (std::uint64_t k = 0; k < 64; ++k) EXPECT_EQ(MultiIndex::from_lex(3, k).lex_index(), k);
}

TEST(MultiIndex, RejectsBadSymbolsAndLengths) {
  EXPECT_THROW(MultiIndex::parse("014"), DomainError);
  EXPECT_THROW(MultiIndex::parse(""), DomainError);
  EXPECT_THROW(MultiIndex::from_lex(2, 16), DomainError);
}

TEST(DenseOperator, RejectsWrongShape) {
  EXPECT_THROW(DenseOperator(2, Matrix::Zero(3, 3)), DomainError);
  EXPECT_THROW(DenseOperator(13, Matrix::Zero(2, 2)), DomainError);
  EXPECT_THROW(DenseOperator::from_matrix(Matrix::Zero(6, 6)), DomainError);
  EXPECT_EQ(DenseOperator::from_matrix(Matrix::Zero(8, 8)).qubits(), 3);
}

TEST(DenseOperator, HermitianHintIsVerified) {
  Matrix m(2, 2);
  m << 1, Complex(0, 1), Complex(0, 1), 1;
  DenseOperator x(1, m);
  EXPECT_FALSE(x.is_hermitian());
  EXPECT_FALSE(x.mark_hermitian().hermitian_hint().value_or(true));
  EXPECT_TRUE(gen_random_hermitian(2, 3).hermitian_hint().value_or(false));
}

TEST(PauliMatrix, SingleQubitAndKronecker) {
  EXPECT_LT(max_diff(pauli_matrix(MultiIndex::parse("0")).matrix(), Matrix::Identity(2, 2)), 1e-15);
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  EXPECT_LT(max_diff(pauli_matrix(MultiIndex::parse("1")).matrix(), sx), 1e-15);
  const Mat expected = testing::kron(testing::single_pauli(3), testing::single_pauli(1));
  EXPECT_LT(max_diff(pauli_matrix(MultiIndex::parse("31")).matrix(), expected), 1e-15);
}

TEST(PauliMatrix, HermitianUnitaryAndOrthonormal) {
  for (std::uint64_t a = 0; a < 16; ++a) {
    const DenseOperator sa = pauli_matrix(MultiIndex::from_lex(2, a));
    EXPECT_TRUE(sa.is_hermitian(0.0));
    EXPECT_LT(max_diff((sa * sa).matrix(), Matrix::Identity(4, 4)), 1e-15);
    for (std::uint64_t b = 0; b < 16; ++b) {
      const Complex ip = hs_inner(sa, pauli_matrix(MultiIndex::from_lex(2, b)));
      EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
}

TEST(NormalizedTrace, IdentityPaulisAndDiagonalSum) {
  EXPECT_NEAR(std::abs(normalized_trace(DenseOperator::identity(3)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(normalized_trace(pauli_matrix(MultiIndex::parse("20")))), 0.0, 1e-15);
  const DenseOperator x = gen_random_complex(2, 11);
  Complex sum = 0;
  for (int i = 0; i < 4; ++i) sum += x(i, i);
  EXPECT_NEAR(std::abs(normalized_trace(x) - sum / 4.0), 0.0, 1e-14);
}

TEST(HsInner, MatchesDoubleLoopAndIsConjugateLinear) {
  const DenseOperator x = gen_random_complex(2, 1);
  const DenseOperator y = gen_random_complex(2, 2);
  Complex sum = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sum += std::conj(x(i, j)) * y(i, j);
  }
  EXPECT_NEAR(std::abs(hs_inner(x, y) - sum / 4.0), 0.0, 1e-13);
  const Complex c(0.3, -1.2);
  EXPECT_NEAR(std::abs(hs_inner(x * c, y) - std::conj(c) * hs_inner(x, y)), 0.0, 1e-13);
  EXPECT_GE(hs_inner(x, x).real(), 0.0);
  EXPECT_NEAR(hs_inner(x, x).imag(), 0.0, 1e-15);
  EXPECT_THROW(hs_inner(x, gen_random_complex(1, 1)), DomainError);
}

TEST(PauliTransform, BasisAndIdentity) {
  const PauliCoefficients id = pauli_transform(DenseOperator::identity(2));
  for (std::size_t k = 0; k < id.size(); ++k) {
    EXPECT_NEAR(std::abs(id[k] - Complex(k == 0 ? 1.0 : 0.0)), 0.0, 1e-15);
  }
  const MultiIndex s = MultiIndex::parse("213");
  const PauliCoefficients c = pauli_transform(pauli_matrix(s));
  for (std::size_t k = 0; k < c.size(); ++k) {
    EXPECT_NEAR(std::abs(c[k] - Complex(k == s.lex_index() ? 1.0 : 0.0)), 0.0, 1e-15);
  }
}

TEST(PauliTransform, MatchesNaiveDefinition) {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const DenseOperator x = gen_random_complex(n, 100 * n + seed);
      const PauliCoefficients fast = pauli_transform(x);
      const auto naive = testing::naive_pauli_transform(n, x.matrix());
      for (std::size_t k = 0; k < naive.size(); ++k) {
        EXPECT_NEAR(std::abs(fast[k] - naive[k]), 0.0, 1e-12) << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(PauliTransform, HermitianIffRealCoefficients) {
  const PauliCoefficients h = pauli_transform(gen_random_hermitian(3, 5));
  for (Complex v : h.values()) EXPECT_NEAR(v.imag(), 0.0, 1e-12);
  const PauliCoefficients g = pauli_transform(gen_random_complex(3, 5));
  double largest_imag = 0.0;
  for (Complex v : g.values()) largest_imag = std::max(largest_imag, std::abs(v.imag()));
  EXPECT_GT(largest_imag, 1e-3);
}

TEST(PauliTransform, ParsevalAndRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    const DenseOperator x = gen_random_complex(n, 40 + n);
    const PauliCoefficients c = pauli_transform(x);
    const double tau = hs_inner(x, x).real();
    EXPECT_NEAR(c.squared_norm(), tau, 1e-10 * tau);
    EXPECT_LT(max_diff(inverse_pauli_transform(c).matrix(), x.matrix()), 1e-12 * x.max_abs());
  }
}

TEST(InversePauliTransform, IndicatorZeroAndExplicitSum) {
  std::vector<Complex> ind(16, 0.0);
  ind[MultiIndex::parse("12").lex_index()] = 1.0;
  EXPECT_LT(max_diff(inverse_pauli_transform(PauliCoefficients(2, ind)).matrix(),
                     pauli_matrix(MultiIndex::parse("12")).matrix()),
            1e-15);
  EXPECT_EQ(inverse_pauli_transform(PauliCoefficients(2, std::vector<Complex>(16))).max_abs(), 0.0);

  Rng rng(9);
  std::vector<Complex> coeffs(16);
  Mat sum = Mat::Zero(4, 4);
  for (std::size_t k = 0; k < 16; ++k) {
    coeffs[k] = rng.complex_normal();
    sum += coeffs[k] * testing::pauli_string(testing::digits_of(2, k));
  }
  const PauliCoefficients c(2, coeffs);
  EXPECT_LT(max_diff(inverse_pauli_transform(c).matrix(), sum), 1e-13);
  const PauliCoefficients back = pauli_transform(inverse_pauli_transform(c));
  for (std::size_t k = 0; k < 16; ++k) EXPECT_NEAR(std::abs(back[k] - coeffs[k]), 0.0, 1e-12);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(DenseOperator::identity(3)), 0);
  EXPECT_EQ(degree(pauli_matrix(MultiIndex::parse("100"))), 1);
  EXPECT_EQ(degree(gen_psi_s(0.3)), 2);
  EXPECT_EQ(degree(DenseOperator::zero(2)), 0);
  for (std::uint64_t k = 0; k < 64; ++k) {
    const MultiIndex s = MultiIndex::from_lex(3, k);
    EXPECT_EQ(degree(pauli_matrix(s)), s.weight());
  }
}

TEST(Degree, ThresholdDropsSmallCoefficients) {
  const DenseOperator x =
      DenseOperator::identity(2) + pauli_matrix(MultiIndex::parse("33")) * Complex(1e-6);
  EXPECT_EQ(degree(x), 2);
  EXPECT_EQ(degree(x, 1e-3), 0);
  EXPECT_THROW(degree(x, -1.0), DomainError);
}

TEST(NumericalRank, Examples) {
  EXPECT_EQ(numerical_rank(DenseOperator::identity(2)), 4);
  EXPECT_EQ(numerical_rank(gen_product(DenseOperator(1, Matrix{{1, 0}, {0, 0}}), 2)), 1);
  const Eigen::HouseholderQR<Matrix> qr(gen_random_complex(2, 77).matrix());
  const Matrix v = qr.householderQ();
  Matrix d = Matrix::Zero(4, 4);
  d(0, 0) = d(1, 1) = 1.0;
  DenseOperator x(2, v * d * v.adjoint());
  EXPECT_EQ(numerical_rank(x), 2);
  EXPECT_EQ(numerical_rank(gen_known_rank_psd(3, 5, 1)), 5);
}

TEST(NumericalRank, RejectsNonHermitian) {
  EXPECT_THROW(numerical_rank(gen_random_complex(2, 1)), DomainError);
}

}  // namespace
}  // namespace qlsi
