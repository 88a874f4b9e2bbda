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

#include "qlsi/hyperc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qlsi/errors.hpp"
#include "qlsi/semigroup.hpp"
#include "qlsi/sobolev.hpp"
#include "qlsi/spectral.hpp"

namespace qlsi {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kR0Slack = 1e-12;

struct Rhs {
  double r0;
  double* max_excess;

  double operator()(double u) const {
    const double arg = r0 * (1.0 + std::exp(-u));
    if (arg > kLn2) {
      *max_excess = std::max(*max_excess, arg - kLn2);
      return alpha(kLn2);
    }
    return alpha(arg);
  }
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

double max_r0_bound(double p0) {
  if (!(p0 > 1.0)) throw DomainError("p0 must exceed 1");
  return (1.0 - 1.0 / p0) * kLn2;
}

void HcParams::validate() const {
  if (!(p0 > 1.0) || !std::isfinite(p0)) throw DomainError("p0 must be a finite value > 1");
  if (!(r0 >= 0.0)) throw DomainError("r0 must be nonnegative");
  if (r0 > max_r0_bound(p0) + kR0Slack) {
    throw DomainError("r0 = " + format_double(r0) + " exceeds (1 - 1/p0) ln 2 = " +
                      format_double(max_r0_bound(p0)) +
                      "; no operator satisfies ||X||_p0 >= e^{n r0} ||X||_1");
  }
  if (!(step > 0.0)) throw DomainError("ODE step must be positive");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be positive");
}

ExponentPath::ExponentPath(HcParams params, std::vector<ExponentSample> samples,
                           double max_clamp_excess)
    : params_(params), samples_(std::move(samples)), max_clamp_excess_(max_clamp_excess) {}

double ExponentPath::u_at(double t) const {
  if (!(t >= 0.0) || t > samples_.back().t * (1.0 + 1e-12) + 1e-15) {
    throw DomainError("t = " + format_double(t) + " outside the solved horizon");
  }
  auto hi = std::lower_bound(samples_.begin(), samples_.end(), t,
                             [](const ExponentSample& s, double v) { return s.t < v; });
  if (hi == samples_.end()) return samples_.back().u;
  if (hi->t == t || hi == samples_.begin()) return hi->u;
  const auto lo = hi - 1;
  // Hermite basis in u-time tau = 4t.
  const double h = 4.0 * (hi->t - lo->t);
  const double s = (t - lo->t) / (hi->t - lo->t);
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * lo->u + (s3 - 2 * s2 + s) * h * lo->du +
         (-2 * s3 + 3 * s2) * hi->u + (s3 - s2) * h * hi->du;
}

double ExponentPath::p_at(double t) const {
  if (t == 0.0) return params_.p0;
  return 1.0 + std::exp(u_at(t));
}

std::string ExponentPath::to_csv() const {
  std::ostringstream out;
  out << "t,u,p\n";
  for (const auto& s : samples_) {
    out << format_double(s.t) << ',' << format_double(s.u) << ',' << format_double(s.p) << '\n';
  }
  return out.str();
}

double max_r0(const DenseOperator& x, double p0) {
  const double bound = max_r0_bound(p0);
  const Eigen::VectorXd sigma = singular_values(x);
  const std::span<const double> view(sigma.data(), sigma.size());
  const double one = schatten_norm_from_singular_values(view, 1.0);
  if (one == 0.0) throw DomainError("r0 of the zero operator");
  const double ratio = schatten_norm_from_singular_values(view, p0) / one;
  const double r0 = std::max(0.0, std::log(ratio) / x.qubits());
  if (r0 > bound + kR0Slack) {
    throw NumericalError("norm ratio gives r0 = " + format_double(r0) + " above (1 - 1/p0) ln 2");
  }
  return std::min(r0, bound);
}

ExponentPath solve_exponent(const HcParams& params) {
  params.validate();
  const double r0 = std::min(params.r0, max_r0_bound(params.p0));
  double excess = 0.0;
  const Rhs rhs{r0, &excess};

  const double tau_end = 4.0 * params.horizon;
  const auto steps =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(tau_end / params.step - 1e-9)));
  std::vector<ExponentSample> samples;
  samples.reserve(steps + 1);

  double u = std::log(params.p0 - 1.0);
  double du = rhs(u);
  samples.push_back({0.0, u, du, params.p0});
  for (std::size_t k = 0; k < steps; ++k) {
    const double tau = static_cast<double>(k) * params.step;
    const double h = (k + 1 == steps) ? tau_end - tau : params.step;
    const double k1 = du;
    const double k2 = rhs(u + 0.5 * h * k1);
    const double k3 = rhs(u + 0.5 * h * k2);
    const double k4 = rhs(u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    du = rhs(u);
    const double t = (k + 1 == steps) ? params.horizon : (tau + h) / 4.0;
    samples.push_back({t, u, du, 1.0 + std::exp(u)});
  }
  return ExponentPath(params, std::move(samples), excess);
}

double weak_exponent(double p0, double r0, double t) {
  if (!(p0 > 1.0)) throw DomainError("p0 must exceed 1");
  if (!(r0 >= 0.0) || r0 > max_r0_bound(p0) + kR0Slack) {
    throw DomainError("r0 outside [0, (1 - 1/p0) ln 2]");
  }
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
  return 1.0 + (p0 - 1.0) * std::exp(4.0 * alpha(std::min(r0, max_r0_bound(p0))) * t);
}

double standard_exponent(double p0, double t) {
  if (!(p0 > 1.0)) throw DomainError("p0 must exceed 1");
  if (!(t >= 0.0)) throw DomainError("t must be nonnegative");
  return 1.0 + (p0 - 1.0) * std::exp(2.0 * t);
}

std::vector<CheckReport> hc_check(const DenseOperator& x, double p0, std::span<const double> t_grid,
                                  double tol, double step) {
  if (t_grid.empty()) throw DomainError("empty time grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0) || (i > 0 && t_grid[i] < t_grid[i - 1])) {
      throw DomainError("time grid must be nonnegative and sorted");
    }
  }
  const double r0 = max_r0(x, p0);
  const double horizon = std::max(t_grid.back(), 1e-12);
  const ExponentPath path = solve_exponent({p0, r0, step, horizon});

  const bool psd = is_psd(x);
  std::vector<DenseOperator> subjects{x};
  std::vector<std::string> names{"theorem2_hc"};
  if (!psd) {
    subjects.push_back(abs_operator(x));
    names.push_back("theorem2_hc_abs");
    subjects.push_back(abs_operator(x.adjoint()));
    names.push_back("theorem2_hc_abs_adjoint");
  }
  std::vector<double> start_norms;
  for (const auto& op : subjects) start_norms.push_back(schatten_norm(op, p0));

  std::vector<CheckReport> reports;
  for (double t : t_grid) {
    const double p = path.p_at(t);
    std::vector<double> evolved;
    for (std::size_t k = 0; k < subjects.size(); ++k) {
      evolved.push_back(schatten_norm(depolarize(subjects[k], t), p));
      CheckReport r = make_inequality(names[k], evolved.back(), start_norms[k], tol);
      r.instance_descriptor = "t=" + format_double(t) + ";p=" + format_double(p) +
                              ";p0=" + format_double(p0) + ";r0=" + format_double(r0);
      reports.push_back(std::move(r));
    }
    if (!psd) {
      CheckReport r = make_inequality("theorem2_hc_factorization", evolved[0],
                                      std::sqrt(evolved[1] * evolved[2]), tol);
      r.instance_descriptor = "t=" + format_double(t) + ";q=" + format_double(p);
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

}  // namespace qlsi
