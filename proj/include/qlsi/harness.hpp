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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qlsi/io.hpp"
#include "qlsi/operator.hpp"
#include "qlsi/report.hpp"

namespace qlsi {

/// Seeded generator: std::mt19937_64 (bit-exact across platforms) with our
/// own Box-Muller transform, since std::normal_distribution is
/// implementation-defined.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64+box-muller";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Mixes a base seed with two counters (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// G^dagger G with i.i.d. standard complex Gaussian G (2^n x 2^n).
DenseOperator gen_random_psd(int n, std::uint64_t seed);
/// G G^dagger with G of shape 2^n x rank; rank `rank` almost surely.
DenseOperator gen_known_rank_psd(int n, int rank, std::uint64_t seed);
/// (G + G^dagger) / 2.
DenseOperator gen_random_hermitian(int n, std::uint64_t seed);
/// G itself.
DenseOperator gen_random_complex(int n, std::uint64_t seed);
/// G1 G2^dagger with inner dimension `rank`.
DenseOperator gen_known_rank_complex(int n, int rank, std::uint64_t seed);
/// Diagonal PSD with |g|^2 entries.
DenseOperator gen_random_diagonal_psd(int n, std::uint64_t seed);

/// rho^{(x)n} for a single-qubit PSD rho.
DenseOperator gen_product(const DenseOperator& rho, int n);
/// |psi_s><psi_s| with |psi_s> = sqrt(s)|00> + sqrt(1-s)|11>.
DenseOperator gen_psi_s(double s);
/// s |phi+><phi+| + (1-s) (I/2) (x) (I/2).
DenseOperator gen_fig1b(double s);

/// X = [[A, C], [C^dagger, B]] split along qubit 1.
struct BlockDecomposition {
  DenseOperator a;
  DenseOperator b;
  DenseOperator c;

  /// Requires a Hermitian operator on n >= 2 qubits.
  static BlockDecomposition split(const DenseOperator& parent);
  DenseOperator reassemble() const;
  /// [[||A||_2, ||C||_2], [||C^dagger||_2, ||B||_2]] as a one-qubit operator.
  DenseOperator norm_matrix() const;
};

struct SuiteTolerances {
  double algebraic = 1e-9;
  double finite_difference = 1e-5;
};

/// Names understood by run_check().
const std::vector<std::string>& lemma_check_names();
const std::vector<std::string>& theorem_check_names();

/// Runs one named check on the instance determined by (n, seed). Every
/// report carries the replay descriptor "check=<name>;n=<n>;seed=<seed>".
std::vector<CheckReport> run_check(const std::string& name, int n, std::uint64_t seed,
                                   const SuiteTolerances& tol = {});

/// Re-runs the check recorded in a descriptor.
std::vector<CheckReport> replay(std::string_view descriptor, const SuiteTolerances& tol = {});

/// Every lemma check once per trial with n drawn from [1, max_n] (the block
/// entropy checks use [2, max(2, max_n)]). Sorted by (check name, trial).
std::vector<CheckReport> run_lemma_suite(std::uint64_t seed, int trials, int max_n = 3,
                                         const SuiteTolerances& tol = {});

/// The inequality and application checks on generated instances, same
/// conventions.
std::vector<CheckReport> run_theorem_suite(std::uint64_t seed, int trials, int max_n = 3,
                                           const SuiteTolerances& tol = {});

struct Figure1Data {
  Table alpha_curve;     // xi, alpha
  Table mixture_bounds;  // s, dirichlet, improved, classical (all / tau(X_s^2))
};

Figure1Data figure1_data(int grid);

}  // namespace qlsi
