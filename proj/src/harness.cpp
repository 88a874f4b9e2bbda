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

#include "qlsi/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "qlsi/applications.hpp"
#include "qlsi/errors.hpp"
#include "qlsi/hyperc.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/sobolev.hpp"
#include "qlsi/spectral.hpp"

namespace qlsi {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ a) ^ (b * 0xd1b54a32d192ed03ULL));
}

namespace {

constexpr double kLn2 = std::numbers::ln2;

Matrix gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix g(rows, cols);
  // Row-major fill so the draw order does not depend on Eigen's storage.
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) g(r, c) = rng.complex_normal();
  }
  return g;
}

DenseOperator hermitian_from(int n, const Matrix& m) {
  DenseOperator op(n, 0.5 * (m + m.adjoint()));
  op.mark_hermitian();
  return op;
}

Eigen::Index side_of(int n) {
  require_qubits(n);
  return Eigen::Index{1} << n;
}

std::span<const double> view(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

std::string descriptor_for(const std::string& name, int n, std::uint64_t seed) {
  return "check=" + name + ";n=" + std::to_string(n) + ";seed=" + std::to_string(seed);
}

// Random PSD instance whose rank is drawn uniformly from [1, 2^n].
DenseOperator random_rank_psd(int n, Rng& rng) {
  const int side = 1 << n;
  const int rank = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(side));
  return gen_known_rank_psd(n, rank, rng.next());
}

double tau_of_squares(const Eigen::VectorXd& lambda) { return lambda.cwiseAbs2().mean(); }

double entropy_of_squares(const Eigen::VectorXd& lambda) {
  const Eigen::VectorXd sq = lambda.cwiseAbs2();
  return entropy_of_values(view(sq));
}

// ---- lemma checks ---------------------------------------------------------

// d/dp ||X||_p = Ent(X^p) / (p^2 ||X||_p^{p-1}), by central differences.
CheckReport norm_derivative(int n, Rng& rng, const SuiteTolerances& tol) {
  const DenseOperator x = random_rank_psd(n, rng);
  const double p = rng.uniform(1.2, 4.0);
  const Eigen::VectorXd lambda = eig_psd(x).eigenvalues;
  auto norm = [&](double q) { return schatten_norm_from_singular_values(view(lambda), q); };
  const double h = 1e-5 * std::max(1.0, p);
  const double fd = (norm(p + h) - norm(p - h)) / (2.0 * h);
  const Eigen::VectorXd powered = lambda.array().pow(p).matrix();
  const double analytic = entropy_of_values(view(powered)) / (p * p * std::pow(norm(p), p - 1.0));
  CheckReport r = make_identity("lemma1_norm_derivative", fd, analytic, tol.finite_difference,
                                /*relative=*/true);
  r.instance_descriptor = "p=" + format_g17(p);
  return r;
}

// f(t) = ||Psi_t X||_{p(t)} with p(t) = 1 + (p0 - 1) e^{2t}.
CheckReport flow_derivative(int n, Rng& rng, const SuiteTolerances& tol) {
  const DenseOperator x = gen_random_psd(n, rng.next());
  const double p0 = rng.uniform(1.2, 3.0);
  const double t = rng.uniform(0.05, 1.0);
  auto p_of = [&](double s) { return standard_exponent(p0, s); };
  auto f = [&](double s) { return schatten_norm(depolarize(x, s), p_of(s)); };
  const double h = 1e-5;
  const double fd = (f(t + h) - f(t - h)) / (2.0 * h);

  const double p = p_of(t);
  const double dp = 2.0 * (p0 - 1.0) * std::exp(2.0 * t);
  const Spectrum z = eig_psd(depolarize(x, t));
  const Eigen::VectorXd z_p = z.eigenvalues.array().pow(p).matrix();  // Y^2
  const double norm_p = schatten_norm_from_singular_values(view(z.eigenvalues), p);
  const double gamma = std::pow(norm_p, p - 1.0);
  const DenseOperator y_a = z.reconstruct();  // Y^{2/p} = Z
  const DenseOperator y_b =
      hermitian_function(z, [p](double l) { return l > 0.0 ? std::pow(l, p - 1.0) : 0.0; });
  const double energy = hs_inner(y_a, generator_apply(y_b)).real();
  const double analytic = (dp / (p * p) * entropy_of_values(view(z_p)) - energy) / gamma;
  CheckReport r = make_identity("lemma1_flow_derivative", fd, analytic, tol.finite_difference,
                                /*relative=*/true);
  r.instance_descriptor = "p0=" + format_g17(p0) + ";t=" + format_g17(t);
  return r;
}

// Ent(X^s) / tau(X^s) >= (ln ||X||_s - ln ||X||_1) / (1 - 1/s).
CheckReport entropy_ratio(int n, Rng& rng, const SuiteTolerances& tol) {
  const DenseOperator x = random_rank_psd(n, rng);
  const double s = rng.uniform(1.0 + 1e-3, 4.0);
  const Eigen::VectorXd lambda = eig_psd(x).eigenvalues;
  const Eigen::VectorXd powered = lambda.array().pow(s).matrix();
  const double rhs = entropy_of_values(view(powered)) / powered.mean();
  const double lhs = (std::log(schatten_norm_from_singular_values(view(lambda), s)) -
                      std::log(schatten_norm_from_singular_values(view(lambda), 1.0))) /
                     (1.0 - 1.0 / s);
  CheckReport r = make_inequality("lemma1_entropy_ratio", lhs, rhs, tol.algebraic);
  r.instance_descriptor = "s=" + format_g17(s);
  return r;
}

std::vector<CheckReport> block_entropy(int n, Rng& rng, const SuiteTolerances& tol) {
  const DenseOperator x = random_rank_psd(std::max(n, 2), rng);
  const BlockDecomposition blocks = BlockDecomposition::split(x);
  const DenseOperator m = blocks.norm_matrix();

  const double ent_x = entropy_of_squares(eig_psd(x).eigenvalues);
  const double ent_m = entropy_of_squares(eig_hermitian(m).eigenvalues);
  const double ent_a = entropy_of_squares(eig_psd(blocks.a).eigenvalues);
  const double ent_b = entropy_of_squares(eig_psd(blocks.b).eigenvalues);
  const double ent_c = entropy_of_squares(singular_values(blocks.c));
  std::vector<CheckReport> out;
  out.push_back(make_inequality("lemma2_block_entropy", ent_x,
                                ent_m + 0.5 * ent_a + 0.5 * ent_b + ent_c, tol.algebraic));
  out.push_back(make_identity("lemma2_trace_identity", hs_inner(x, x).real(),
                              hs_inner(m, m).real(), tol.algebraic));
  return out;
}

// <C, K C> + <C^dag, K C^dag> >= <|C|, K |C|> + <|C^dag|, K |C^dag|>.
CheckReport dirichlet_abs(int n, Rng& rng, const SuiteTolerances& tol) {
  const DenseOperator c = gen_random_complex(n, rng.next());
  const DenseOperator c_dag = c.adjoint();
  const double lhs = dirichlet_form(abs_operator(c)) + dirichlet_form(abs_operator(c_dag));
  const double rhs = dirichlet_form(c) + dirichlet_form(c_dag);
  return make_inequality("lemma3_dirichlet_abs", lhs, rhs, tol.algebraic);
}

// <X^{2/p}, K X^{2-2/p}> >= 4 (p-1)/p^2 <X, K X> on X + eps I.
CheckReport stroock_varopoulos(int n, Rng& rng, const SuiteTolerances& tol) {
  DenseOperator x = random_rank_psd(n, rng);
  const double p = rng.uniform(1.0 + 1e-3, 4.0);
  const double eps = 1e-6 * eig_psd(x).eigenvalues.maxCoeff();
  x = x + DenseOperator::identity(n) * eps;
  const Spectrum spec = eig_psd(x);
  const DenseOperator left = hermitian_function(spec, [p](double l) { return std::pow(l, 2.0 / p); });
  const DenseOperator right =
      hermitian_function(spec, [p](double l) { return std::pow(l, 2.0 - 2.0 / p); });
  const double rhs = hs_inner(left, generator_apply(right)).real();
  const double lhs = 4.0 * (p - 1.0) / (p * p) * dirichlet_form(x);
  CheckReport r = make_inequality("stroock_varopoulos", lhs, rhs, tol.algebraic);
  r.instance_descriptor = "p=" + format_g17(p) + ";shift=" + format_g17(eps);
  return r;
}

// Ent(X^2) <= n ln 2 tau(X^2), i.e. xi in [0, ln 2].
CheckReport xi_range(int n, Rng& rng, const SuiteTolerances& tol) {
  const DenseOperator x = random_rank_psd(n, rng);
  const Eigen::VectorXd lambda = eig_psd(x).eigenvalues;
  return make_inequality("appendix_a_xi_range", entropy_of_squares(lambda),
                         n * kLn2 * tau_of_squares(lambda), tol.algebraic);
}

// ---- theorem checks -------------------------------------------------------

CheckReport theorem1(int n, Rng& rng, const SuiteTolerances& tol) {
  const LsiReport rep = lsi_check(random_rank_psd(n, rng), tol.algebraic);
  CheckReport r = rep.as_check();
  r.instance_descriptor = "xi=" + format_g17(rep.xi) + ";alpha=" + format_g17(rep.alpha_xi);
  return r;
}

CheckReport theorem3(int n, Rng& rng, const SuiteTolerances& tol) {
  return faber_krahn_check(random_rank_psd(n, rng), tol.algebraic);
}

CheckReport theorem4(int n, Rng& rng, const SuiteTolerances& tol) {
  const int side = 1 << n;
  const int rank = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(side));
  const bool hermitian = rng.next() % 2 == 0;
  const DenseOperator x = hermitian ? gen_known_rank_psd(n, rank, rng.next())
                                    : gen_known_rank_complex(n, rank, rng.next());
  return sz_check(x, tol.algebraic).as_check();
}

std::vector<CheckReport> theorem2(int n, Rng& rng, const SuiteTolerances& tol) {
  static constexpr double kP0[] = {1.5, 2.0, 3.0};
  const double p0 = kP0[rng.next() % 3];
  const bool psd = rng.next() % 2 == 0;
  const DenseOperator x = psd ? random_rank_psd(n, rng) : gen_random_complex(n, rng.next());
  std::vector<double> grid(20);
  for (int i = 0; i < 20; ++i) grid[i] = 2.0 * i / 19.0;
  return hc_check(x, p0, grid, tol.algebraic);
}

using CheckFn = std::function<std::vector<CheckReport>(int, Rng&, const SuiteTolerances&)>;

template <typename F>
CheckFn single(F f) {
  return [f](int n, Rng& rng, const SuiteTolerances& tol) {
    return std::vector<CheckReport>{f(n, rng, tol)};
  };
}

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> checks = {
      {"lemma1_norm_derivative", single(norm_derivative)},
      {"lemma1_flow_derivative", single(flow_derivative)},
      {"lemma1_entropy_ratio", single(entropy_ratio)},
      {"lemma2_block_entropy", block_entropy},
      {"lemma3_dirichlet_abs", single(dirichlet_abs)},
      {"stroock_varopoulos", single(stroock_varopoulos)},
      {"appendix_a_xi_range", single(xi_range)},
      {"theorem1_lsi", single(theorem1)},
      {"theorem2_hc", theorem2},
      {"theorem3_faber_krahn", single(theorem3)},
      {"theorem4_schwartz_zippel", single(theorem4)},
  };
  return checks;
}

std::vector<CheckReport> run_suite(const std::vector<std::string>& names, std::uint64_t seed,
                                   int trials, int max_n, const SuiteTolerances& tol) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  require_qubits(max_n);
  std::vector<CheckReport> all;
  for (int trial = 0; trial < trials; ++trial) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      const std::uint64_t instance_seed = derive_seed(seed, static_cast<std::uint64_t>(trial), k);
      int n = 1 + static_cast<int>(derive_seed(instance_seed, 1) % static_cast<std::uint64_t>(max_n));
      if (names[k] == "lemma2_block_entropy") n = std::max(n, 2);
      for (auto& r : run_check(names[k], n, instance_seed, tol)) {
        r.trial = trial;
        all.push_back(std::move(r));
      }
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.name != b.name ? a.name < b.name : a.trial < b.trial;
  });
  return all;
}

}  // namespace

DenseOperator gen_random_psd(int n, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix g = gaussian(rng, side_of(n), side_of(n));
  return hermitian_from(n, g.adjoint() * g);
}

DenseOperator gen_known_rank_psd(int n, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > side_of(n)) throw DomainError("rank outside [1, 2^n]");
  Rng rng(seed);
  const Matrix g = gaussian(rng, side_of(n), rank);
  return hermitian_from(n, g * g.adjoint());
}

DenseOperator gen_random_hermitian(int n, std::uint64_t seed) {
  Rng rng(seed);
  return hermitian_from(n, gaussian(rng, side_of(n), side_of(n)));
}

DenseOperator gen_random_complex(int n, std::uint64_t seed) {
  Rng rng(seed);
  return DenseOperator(n, gaussian(rng, side_of(n), side_of(n)));
}

DenseOperator gen_known_rank_complex(int n, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > side_of(n)) throw DomainError("rank outside [1, 2^n]");
  Rng rng(seed);
  const Matrix g1 = gaussian(rng, side_of(n), rank);
  const Matrix g2 = gaussian(rng, side_of(n), rank);
  return DenseOperator(n, g1 * g2.adjoint());
}

DenseOperator gen_random_diagonal_psd(int n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m = Matrix::Zero(side_of(n), side_of(n));
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) = std::norm(rng.complex_normal());
  DenseOperator op(n, std::move(m));
  op.mark_hermitian();
  return op;
}

DenseOperator gen_product(const DenseOperator& rho, int n) {
  require_qubits(n);
  if (rho.qubits() != 1) throw DomainError("product factor must be a single-qubit operator");
  if (!is_psd(rho)) throw DomainError("product factor must be positive semidefinite");
  Matrix out = rho.matrix();
  for (int k = 1; k < n; ++k) {
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i) {
      for (Eigen::Index j = 0; j < out.cols(); ++j) {
        next.block(2 * i, 2 * j, 2, 2) = out(i, j) * rho.matrix();
      }
    }
    out = std::move(next);
  }
  return hermitian_from(n, out);
}

DenseOperator gen_psi_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s outside [0, 1]");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = std::sqrt(s);
  psi(3) = std::sqrt(1.0 - s);
  return hermitian_from(2, psi * psi.adjoint());
}

DenseOperator gen_fig1b(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("s outside [0, 1]");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = std::numbers::sqrt2 / 2.0;
  const Matrix mixed = Matrix::Identity(4, 4) * 0.25;
  return hermitian_from(2, s * (psi * psi.adjoint()) + (1.0 - s) * mixed);
}

BlockDecomposition BlockDecomposition::split(const DenseOperator& parent) {
  if (parent.qubits() < 2) throw DomainError("block decomposition needs at least 2 qubits");
  if (!parent.is_hermitian()) throw DomainError("block decomposition needs a Hermitian operator");
  const Eigen::Index half = parent.dim() / 2;
  const int m = parent.qubits() - 1;
  const Matrix& x = parent.matrix();
  DenseOperator a(m, x.topLeftCorner(half, half));
  DenseOperator b(m, x.bottomRightCorner(half, half));
  a.mark_hermitian();
  b.mark_hermitian();
  return BlockDecomposition{std::move(a), std::move(b), DenseOperator(m, x.topRightCorner(half, half))};
}

DenseOperator BlockDecomposition::reassemble() const {
  const Eigen::Index half = a.dim();
  Matrix x(2 * half, 2 * half);
  x << a.matrix(), c.matrix(), c.matrix().adjoint(), b.matrix();
  return DenseOperator(a.qubits() + 1, std::move(x));
}

DenseOperator BlockDecomposition::norm_matrix() const {
  Matrix m(2, 2);
  m << schatten_norm(a, 2.0), schatten_norm(c, 2.0), schatten_norm(c.adjoint(), 2.0),
      schatten_norm(b, 2.0);
  DenseOperator op(1, std::move(m));
  op.mark_hermitian();
  return op;
}

const std::vector<std::string>& lemma_check_names() {
  static const std::vector<std::string> names = {
      "appendix_a_xi_range",   "lemma1_entropy_ratio", "lemma1_flow_derivative",
      "lemma1_norm_derivative", "lemma2_block_entropy", "lemma3_dirichlet_abs",
      "stroock_varopoulos"};
  return names;
}

const std::vector<std::string>& theorem_check_names() {
  static const std::vector<std::string> names = {"theorem1_lsi", "theorem2_hc",
                                                 "theorem3_faber_krahn",
                                                 "theorem4_schwartz_zippel"};
  return names;
}

std::vector<CheckReport> run_check(const std::string& name, int n, std::uint64_t seed,
                                   const SuiteTolerances& tol) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown check \"" + name + "\"");
  require_qubits(n);
  Rng rng(seed);
  std::vector<CheckReport> reports = it->second(n, rng, tol);
  const std::string replay_key = descriptor_for(name, n, seed);
  for (auto& r : reports) {
    r.instance_seed = seed;
    r.instance_descriptor =
        r.instance_descriptor.empty() ? replay_key : replay_key + "|" + r.instance_descriptor;
  }
  return reports;
}

std::vector<CheckReport> replay(std::string_view descriptor, const SuiteTolerances& tol) {
  descriptor = descriptor.substr(0, descriptor.find('|'));
  std::string name;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  while (!descriptor.empty()) {
    const auto end = descriptor.find(';');
    const std::string_view item = descriptor.substr(0, end);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("malformed descriptor item");
    const std::string_view key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "check") {
      name = std::string(value);
    } else if (key == "n" || key == "seed") {
      std::uint64_t parsed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw DomainError("malformed number in descriptor");
      }
      if (key == "n") {
        n = static_cast<int>(parsed);
      } else {
        seed = parsed;
      }
    }
    descriptor = end == std::string_view::npos ? std::string_view{} : descriptor.substr(end + 1);
  }
  if (name.empty() || !n || !seed) throw DomainError("descriptor needs check, n and seed");
  return run_check(name, *n, *seed, tol);
}

std::vector<CheckReport> run_lemma_suite(std::uint64_t seed, int trials, int max_n,
                                         const SuiteTolerances& tol) {
  return run_suite(lemma_check_names(), seed, trials, max_n, tol);
}

std::vector<CheckReport> run_theorem_suite(std::uint64_t seed, int trials, int max_n,
                                           const SuiteTolerances& tol) {
  return run_suite(theorem_check_names(), seed, trials, max_n, tol);
}

Figure1Data figure1_data(int grid) {
  if (grid < 2) throw DomainError("figure grid needs at least 2 points");
  Figure1Data data;
  data.alpha_curve.columns = {"xi", "alpha"};
  data.mixture_bounds.columns = {"s", "dirichlet", "improved_lsi", "classical_lsi"};
  for (int i = 0; i < grid; ++i) {
    const double frac = static_cast<double>(i) / (grid - 1);
    const double xi_value = i + 1 == grid ? kLn2 : kLn2 * frac;
    data.alpha_curve.rows.push_back({xi_value, alpha(xi_value)});

    const double s = i + 1 == grid ? 1.0 : frac;
    const DenseOperator x = gen_fig1b(s);
    const LsiReport rep = lsi_check(x);
    const double tau_sq = hs_inner(x, x).real();
    data.mixture_bounds.rows.push_back(
        {s, rep.rhs / tau_sq, rep.lhs / tau_sq, rep.classical_lhs / tau_sq});
  }
  return data;
}

}  // namespace qlsi
