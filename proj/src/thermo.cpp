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

#include "tdlme/thermo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tdlme/errors.hpp"

namespace tdlme {

namespace {

double real_trace(const Mat4& a, const Mat4& b) { return (a * b).trace().real(); }

}  // namespace

HeatCurrent heat_current(int i, const Mat4& rho, double t, const SystemConfig& cfg) {
  const Generator g = tdlme_generator(t, cfg);
  const Mat4 d = g.dissipator(i, rho);
  const Mat4 hi = interaction_hamiltonian(cfg);
  const Mat4 hb = bare_hamiltonian(t, cfg);
  return {cfg.zeta2 * real_trace(g.hamiltonian(), d), cfg.zeta2 * real_trace(hb, d),
          cfg.zeta2 * real_trace(hi, d)};
}

double entropy(const Mat4& rho) {
  const ComplexMatrix log_rho = matrix_log_hermitian(rho);
  return -(rho * log_rho).trace().real();
}

double entropy_rate(const Mat4& rho, double t, const SystemConfig& cfg) {
  const Generator g = tdlme_generator(t, cfg);
  const Mat4 log_rho = matrix_log_hermitian(rho);
  return -cfg.zeta2 * (real_trace(g.dissipator(1, rho), log_rho) +
                       real_trace(g.dissipator(2, rho), log_rho));
}

double entropy_production_rate(const Mat4& rho, double t, const SystemConfig& cfg) {
  const Generator g = tdlme_generator(t, cfg);
  const Mat4 log_rho = matrix_log_hermitian(rho);
  double sum = 0.0;
  for (int i = 1; i <= 2; ++i) {
    const Mat4 op = log_rho + cfg.bath(i).beta() * g.hamiltonian();
    sum += real_trace(op, g.dissipator(i, rho));
  }
  return -cfg.zeta2 * sum;
}

ThermoRecord thermo_record(const Mat4& rho, double t, const SystemConfig& cfg) {
  const Generator g = tdlme_generator(t, cfg);
  const Mat4 log_rho = matrix_log_hermitian(rho);
  const Mat4 hi = interaction_hamiltonian(cfg);
  const Mat4 hb = bare_hamiltonian(t, cfg);
  const Mat4& h = g.hamiltonian();
  const double z2 = cfg.zeta2;

  ThermoRecord r;
  r.t = t;
  r.s = -(rho * log_rho).trace().real();
  double sigma = 0.0;
  double j[2];
  double js[2];
  double ji[2];
  for (int i = 1; i <= 2; ++i) {
    const Mat4 d = g.dissipator(i, rho);
    j[i - 1] = z2 * real_trace(h, d);
    js[i - 1] = z2 * real_trace(hb, d);
    ji[i - 1] = z2 * real_trace(hi, d);
    sigma += real_trace(Mat4(log_rho + cfg.bath(i).beta() * h), d);
  }
  r.j1 = j[0];
  r.j2 = j[1];
  r.js1 = js[0];
  r.ji1 = ji[0];
  r.js2 = js[1];
  r.ji2 = ji[1];
  r.sigma_dot = -z2 * sigma;
  r.near_pure = min_eigenvalue(rho) < 1e-9;
  return r;
}

double effective_temperature_check(int i, double t, const SystemConfig& cfg) {
  const Rates r = dissipation_rates(i, t, cfg);
  if (r.plus == 0.0) throw std::domain_error("effective_temperature_check: gamma+ is zero");
  const double boltzmann = std::exp(2.0 * cfg.bath(i).beta() * instantaneous_gap(i, t, cfg));
  return std::abs(r.minus / r.plus - boltzmann) / boltzmann;
}

const char* to_string(CrossingStatus s) {
  switch (s) {
    case CrossingStatus::kFound: return "found";
    case CrossingStatus::kAlwaysPositive: return "always_positive";
    case CrossingStatus::kInsufficientHorizon: return "insufficient_horizon";
  }
  return "unknown";
}

CrossingResult find_tau0(const Trajectory& traj, const SystemConfig& cfg,
                         const IntegratorConfig& icfg, const CrossingOptions& opts) {
  if (traj.size() == 0) throw ContractViolation("find_tau0: empty trajectory");
  CrossingResult out;
  std::size_t last_pos = 0;
  bool seen_pos = false;
  std::size_t hit = traj.size();
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double s = entropy_production_rate(traj.states[k], traj.times[k], cfg);
    if (s > opts.noise_floor) {
      seen_pos = true;
      last_pos = k;
    } else if (s < -opts.noise_floor && seen_pos) {
      hit = k;
      break;
    }
  }

  if (hit == traj.size()) {
    const Generator g = tdlme_generator(traj.times.back(), cfg);
    out.final_residual = max_abs(g.apply(traj.states.back()));
    out.status = out.final_residual < opts.settled_residual ? CrossingStatus::kAlwaysPositive
                                                            : CrossingStatus::kInsufficientHorizon;
    return out;
  }

  IntegratorConfig sub = icfg;
  sub.record_stride = std::numeric_limits<std::size_t>::max();
  sub.step = traj.step > 0.0 ? traj.step : icfg.step_for(cfg);
  double t_lo = traj.times[last_pos];
  double t_hi = traj.times[hit];
  Mat4 rho_lo = traj.states[last_pos];
  while (t_hi - t_lo > opts.time_tol) {
    const double mid = 0.5 * (t_lo + t_hi);
    const Trajectory leg = integrate(rho_lo, t_lo, mid, cfg, sub);
    const double s = entropy_production_rate(leg.states.back(), mid, cfg);
    if (s > opts.noise_floor) {
      t_lo = mid;
      rho_lo = leg.states.back();
    } else if (s < -opts.noise_floor) {
      t_hi = mid;
    } else {
      t_lo = t_hi = mid;
    }
  }
  out.status = CrossingStatus::kFound;
  out.t_lo = t_lo;
  out.t_hi = t_hi;
  out.tau0 = 0.5 * (t_lo + t_hi);
  return out;
}

PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw ContractViolation("fit_power_law: size mismatch");
  if (xs.size() < 3) throw ContractViolation("fit_power_law: need at least 3 points");
  const auto n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!(xs[k] > 0.0) || !(ys[k] > 0.0)) {
      throw std::domain_error("fit_power_law: data must be positive");
    }
    const double lx = std::log(xs[k]);
    const double ly = std::log(ys[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  const double vxx = sxx - sx * sx / n;
  const double vxy = sxy - sx * sy / n;
  const double vyy = syy - sy * sy / n;
  if (!(vxx > 0.0)) throw ContractViolation("fit_power_law: x values are all equal");
  PowerLawFit fit;
  fit.slope = vxy / vxx;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.r2 = vyy > 0.0 ? vxy * vxy / (vxx * vyy) : 1.0;
  return fit;
}

TwoFactorFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& zs,
                           const std::vector<double>& ys) {
  if (xs.size() != ys.size() || zs.size() != ys.size()) {
    throw ContractViolation("fit_power_law: size mismatch");
  }
  if (xs.size() < 4) throw ContractViolation("fit_power_law: need at least 4 points");
  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto u = static_cast<std::size_t>(k);
    if (!(xs[u] > 0.0) || !(zs[u] > 0.0) || !(ys[u] > 0.0)) {
      throw std::domain_error("fit_power_law: data must be positive");
    }
    a(k, 0) = std::log(xs[u]);
    a(k, 1) = std::log(zs[u]);
    a(k, 2) = 1.0;
    b(k) = std::log(ys[u]);
  }
  const Eigen::Vector3d coef = a.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd resid = b - a * coef;
  const double ss_tot = (b.array() - b.mean()).square().sum();
  TwoFactorFit fit;
  fit.slope_x = coef(0);
  fit.slope_z = coef(1);
  fit.intercept = coef(2);
  fit.r2 = ss_tot > 0.0 ? 1.0 - resid.squaredNorm() / ss_tot : 1.0;
  return fit;
}

}  // namespace tdlme
