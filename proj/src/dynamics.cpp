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

#include "tdlme/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tdlme/errors.hpp"

namespace tdlme {

namespace {

double max_rate(const SystemConfig& cfg) {
  double out = 0.0;
  for (int i = 1; i <= 2; ++i) {
    const QubitParams& q = cfg.qubit(i);
    const BathParams b = cfg.bath(i);
    const double e_max = std::hypot(q.epsilon, q.drive_amplitude);
    const double sin2 = q.drive_amplitude * q.drive_amplitude / (e_max * e_max);
    out = std::max({out, gamma0_closed(2.0 * q.epsilon, b), gamma0_closed(-2.0 * q.epsilon, b),
                    gamma0_closed(2.0 * e_max, b), gamma0_closed(-2.0 * e_max, b),
                    gamma0_closed(0.0, b) * sin2});
  }
  return out;
}

double min_rate(const SystemConfig& cfg) {
  double out = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 2; ++i) {
    const BathParams b = cfg.bath(i);
    const double e = cfg.qubit(i).epsilon;
    out = std::min({out, gamma0_closed(2.0 * e, b), gamma0_closed(-2.0 * e, b)});
  }
  return out;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (step && !(*step > 0.0 && std::isfinite(*step))) {
    throw ContractViolation("IntegratorConfig: step must be positive");
  }
  if (record_stride < 1) throw ContractViolation("IntegratorConfig: record_stride must be >= 1");
  if (steady_check_every < 1) {
    throw ContractViolation("IntegratorConfig: steady_check_every must be >= 1");
  }
  if (!(positivity_tol >= 0.0)) throw ContractViolation("IntegratorConfig: positivity_tol < 0");
  if (!(steady_tol > 0.0)) throw ContractViolation("IntegratorConfig: steady_tol must be positive");
  if (t_max && !(*t_max > 0.0)) throw ContractViolation("IntegratorConfig: t_max must be positive");
}

double IntegratorConfig::step_for(const SystemConfig& cfg) const {
  if (step) return *step;
  const double e_max = std::max(std::hypot(cfg.qubit1.epsilon, cfg.qubit1.drive_amplitude),
                                std::hypot(cfg.qubit2.epsilon, cfg.qubit2.drive_amplitude));
  double scale = 1.0 / (2.0 * e_max);
  const double dissipative = cfg.zeta2 * max_rate(cfg);
  if (dissipative > 0.0) scale = std::min(scale, 1.0 / dissipative);
  return 1e-3 * scale;
}

double IntegratorConfig::t_max_for(const SystemConfig& cfg) const {
  if (t_max) return *t_max;
  return 100.0 / (cfg.zeta2 * min_rate(cfg));
}

Mat4 finish_density_step(const Mat4& raw, double t, const IntegratorConfig& icfg, StepInfo* info) {
  Mat4 rho = 0.5 * (raw + raw.adjoint());
  const double tr = rho.trace().real();
  bool renormalized = false;
  if (std::abs(tr - 1.0) > 1e-12) {
    rho /= tr;
    renormalized = true;
  }
  const double lo = min_eigenvalue(rho);
  if (!std::isfinite(lo)) throw IntegrationError("non-finite state", t);
  if (lo < -icfg.positivity_tol && icfg.positivity == PositivityPolicy::kEnforce) {
    throw IntegrationError("state lost positivity (min eigenvalue " + std::to_string(lo) + ")", t);
  }
  if (info) {
    info->renormalized = renormalized;
    info->min_eigenvalue = lo;
  }
  return rho;
}

Trajectory integrate(const Mat4& rho0, double t0, double t1, const SystemConfig& cfg,
                     const IntegratorConfig& icfg) {
  icfg.validate();
  if (!(t1 > t0)) throw ContractViolation("integrate: empty time span");
  const double h_nominal = icfg.step_for(cfg);
  const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / h_nominal - 1e-9));
  const double h = (t1 - t0) / static_cast<double>(n);

  Trajectory out;
  out.step = h;
  const bool driven = cfg.driven();
  const Generator fixed = lme_generator(cfg);

  auto record = [&](double t, const Mat4& rho, bool neg, bool dip, double lo) {
    out.times.push_back(t);
    out.states.push_back(rho);
    out.rate_negative.push_back(neg);
    out.positivity_dip.push_back(dip);
    out.min_eigenvalue.push_back(lo);
  };

  Mat4 rho = rho0;
  const double lo0 = min_eigenvalue(rho);
  const bool neg0 = driven ? tdlme_generator(t0, cfg).rates_negative() : fixed.rates_negative();
  record(t0, rho, neg0, lo0 < -icfg.positivity_tol, lo0);

  bool neg = false;
  bool dip = false;
  auto rhs = [&](double t, const Mat4& r) -> Mat4 {
    if (!driven) return fixed.apply(r);
    const Generator g = tdlme_generator(t, cfg);
    neg = neg || g.rates_negative();
    return g.apply(r);
  };
  if (!driven) neg = fixed.rates_negative();

  for (std::size_t k = 1; k <= n; ++k) {
    const double t = t0 + static_cast<double>(k - 1) * h;
    StepInfo info;
    rho = rk4_step(rho, t, h, rhs, icfg, &info);
    if (info.renormalized) ++out.renormalizations;
    dip = dip || info.min_eigenvalue < -icfg.positivity_tol;
    if (k % icfg.record_stride == 0 || k == n) {
      const double tk = k == n ? t1 : t0 + static_cast<double>(k) * h;
      record(tk, rho, neg, dip, info.min_eigenvalue);
      neg = driven ? false : fixed.rates_negative();
      dip = false;
    }
  }
  return out;
}

Trajectory integrate(const DensityMatrix& rho0, double t_end, const SystemConfig& cfg,
                     const IntegratorConfig& icfg) {
  return integrate(rho0.matrix(), 0.0, t_end, cfg, icfg);
}

SteadyStateResult steady_state_by_integration(const DensityMatrix& rho0, const SystemConfig& cfg,
                                              const IntegratorConfig& icfg) {
  icfg.validate();
  if (cfg.driven()) {
    throw UnsupportedConfiguration("steady_state_by_integration: configuration is driven");
  }
  const double t_max = icfg.t_max_for(cfg);
  if (!std::isfinite(t_max)) {
    throw UnsupportedConfiguration("steady_state_by_integration: no dissipation, set t_max");
  }
  const double h = icfg.step_for(cfg);
  const Generator g = lme_generator(cfg);
  auto rhs = [&](double, const Mat4& r) { return g.apply(r); };

  Mat4 rho = rho0.matrix();
  double t = 0.0;
  double residual = max_abs(g.apply(rho));
  std::size_t k = 0;
  while (residual >= icfg.steady_tol) {
    if (t > t_max) {
      throw ConvergenceError("steady state not reached by t = " + std::to_string(t_max), residual);
    }
    rho = rk4_step(rho, t, h, rhs, icfg);
    t += h;
    if (++k % icfg.steady_check_every == 0) residual = max_abs(g.apply(rho));
  }
  return {DensityMatrix(rho), t, residual};
}

}  // namespace tdlme
