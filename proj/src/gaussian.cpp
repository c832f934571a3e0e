// Copyright 2026 The tdlme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdlme/gaussian.hpp"

#include <algorithm>
#include <cmath>

#include "tdlme/dynamics.hpp"
#include "tdlme/errors.hpp"

namespace tdlme {

namespace {

struct BareRates {
  double minus;
  double plus;
};

BareRates bare_rates(int i, const SystemConfig& cfg) {
  const BathParams b = cfg.bath(i);
  const double e = cfg.qubit(i).epsilon;
  return {gamma0_closed(2.0 * e, b), gamma0_closed(-2.0 * e, b)};
}

}  // namespace

DriftDiffusion drift_diffusion(const SystemConfig& cfg) {
  if (cfg.driven()) {
    throw UnsupportedConfiguration("drift_diffusion: the covariance path needs an undriven system");
  }
  const BareRates r1 = bare_rates(1, cfg);
  const BareRates r2 = bare_rates(2, cfg);
  const double detuning = cfg.qubit1.epsilon - cfg.qubit2.epsilon;
  const Complex il{0.0, cfg.lambda};
  DriftDiffusion dd;
  dd.w(0, 0) = Complex{-0.5 * cfg.zeta2 * (r1.plus + r1.minus), detuning};
  dd.w(1, 1) = Complex{-0.5 * cfg.zeta2 * (r2.plus + r2.minus), -detuning};
  dd.w(0, 1) = il;
  dd.w(1, 0) = il;
  dd.d = Mat2::Zero();
  dd.d(0, 0) = cfg.zeta2 * r1.plus;
  dd.d(1, 1) = cfg.zeta2 * r2.plus;
  return dd;
}

Mat2 covariance_rhs(const CovarianceMatrix& c, const DriftDiffusion& dd) {
  return dd.w * c + c * dd.w.adjoint() + dd.d;
}

CovarianceMatrix steady_covariance(const DriftDiffusion& dd) {
  const Mat2 c = lyapunov_solve(dd.w, dd.d);
  return 0.5 * (c + c.adjoint());
}

CovarianceMatrix covariance_from_density(const Mat4& rho) {
  const Mat4 up[2] = {embed_qubit_op(pauli::raising(), 1), embed_qubit_op(pauli::raising(), 2)};
  const Mat4 dn[2] = {embed_qubit_op(pauli::lowering(), 1), embed_qubit_op(pauli::lowering(), 2)};
  CovarianceMatrix c;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c(i, j) = (up[i] * dn[j] * rho).trace();
  }
  return c;
}

CovarianceMatrix covariance_from_density(const DensityMatrix& rho) {
  return covariance_from_density(rho.matrix());
}

double relaxation_time(const DriftDiffusion& dd) {
  const Eigen::Vector2cd ev = eigenvalues(dd.w);
  const double slowest = std::max(ev(0).real(), ev(1).real());
  if (slowest >= -1e-14) {
    throw StabilityError("relaxation_time: drift matrix is not Hurwitz");
  }
  return 1.0 / std::abs(2.0 * slowest);
}

HeatCurrents steady_heat_currents(const CovarianceMatrix& c, const SystemConfig& cfg) {
  if (cfg.driven()) {
    throw UnsupportedConfiguration("steady_heat_currents: the covariance path needs an undriven system");
  }
  const double coherence = (c(0, 1) + c(1, 0)).real();
  auto current = [&](int i) {
    const BareRates r = bare_rates(i, cfg);
    const double e = cfg.qubit(i).epsilon;
    const double pop = c(i - 1, i - 1).real();
    return cfg.zeta2 * (-0.5 * (r.plus + r.minus) * (4.0 * e * pop + cfg.lambda * coherence) +
                        2.0 * e * r.plus);
  };
  return {current(1), current(2)};
}

CovarianceTrajectory integrate_covariance(const CovarianceMatrix& c0, double t_end,
                                          const DriftDiffusion& dd, double step, std::size_t stride) {
  if (!(t_end > 0.0) || !(step > 0.0) || stride < 1) {
    throw ContractViolation("integrate_covariance: need t_end > 0, step > 0, stride >= 1");
  }
  const auto n = static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
  const double h = t_end / static_cast<double>(n);
  auto rhs = [&](double, const Mat2& c) -> Mat2 { return covariance_rhs(c, dd); };
  CovarianceTrajectory out;
  out.times.push_back(0.0);
  out.states.push_back(c0);
  Mat2 c = c0;
  for (std::size_t k = 1; k <= n; ++k) {
    c = rk4_raw(c, static_cast<double>(k - 1) * h, h, rhs);
    if (k % stride == 0 || k == n) {
      out.times.push_back(k == n ? t_end : static_cast<double>(k) * h);
      out.states.push_back(c);
    }
  }
  return out;
}

}  // namespace tdlme
