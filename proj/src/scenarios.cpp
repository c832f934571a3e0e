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

#include "tdlme/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "tdlme/errors.hpp"
#include "tdlme/thermo.hpp"

namespace tdlme {

namespace {

std::string failure(const std::exception& e) { return std::string("failed: ") + e.what(); }

IntegratorConfig effective_integrator(const ScenarioConfig& cfg, const SystemConfig& sys,
                                      const RunOptions& opts) {
  IntegratorConfig ic = cfg.integrator;
  if (opts.step) ic.step = opts.step;
  if (!cfg.record_stride_set) {
    const double h = ic.step_for(sys);
    ic.record_stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(cfg.record_interval / h)));
  }
  if (!cfg.positivity_set && sys.driven()) ic.positivity = PositivityPolicy::kRecord;
  return ic;
}

ScenarioResult run_trajectory(const ScenarioConfig& cfg, const RunOptions& opts, bool driven_columns) {
  const SystemConfig& sys = cfg.system;
  const IntegratorConfig ic = effective_integrator(cfg, sys, opts);
  ScenarioResult out;
  out.table.header = {"t", "J1", "J2", "Js1", "JI1", "Js2", "JI2", "S", "Sigma_dot", "min_eig", "rate_neg_flag"};
  if (driven_columns) {
    out.table.header.push_back("beta_eff_dev1");
    out.table.header.push_back("beta_eff_dev2");
  }
  const Trajectory traj = integrate(DensityMatrix::maximally_mixed(), cfg.t_end, sys, ic);
  std::size_t near_pure = 0;
  std::size_t negative = 0;
  std::size_t dips = 0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const ThermoRecord r = thermo_record(traj.states[k], traj.times[k], sys);
    near_pure += r.near_pure ? 1 : 0;
    negative += traj.rate_negative[k] ? 1 : 0;
    dips += traj.positivity_dip[k] ? 1 : 0;
    std::vector<CsvCell> row = {r.t, r.j1, r.j2, r.js1, r.ji1, r.js2, r.ji2, r.s, r.sigma_dot,
                                traj.min_eigenvalue[k], static_cast<long long>(traj.rate_negative[k])};
    if (driven_columns) {
      row.emplace_back(effective_temperature_check(1, r.t, sys));
      row.emplace_back(effective_temperature_check(2, r.t, sys));
    }
    out.table.add_row(std::move(row));
  }
  if (near_pure) {
    out.warnings.push_back(std::to_string(near_pure) +
                           " frames have an eigenvalue below 1e-9; Sigma_dot there is biased by the log clamp");
  }
  if (negative) out.warnings.push_back(std::to_string(negative) + " frames saw a negative dissipation rate");
  if (dips) out.warnings.push_back(std::to_string(dips) + " frames dipped below the positivity tolerance");
  if (traj.renormalizations) {
    out.warnings.push_back("trace was renormalized " + std::to_string(traj.renormalizations) + " times");
  }
  return out;
}

ScenarioResult run_steady(const ScenarioConfig& cfg, const RunOptions& opts) {
  const SystemConfig& sys = cfg.system;
  const IntegratorConfig ic = effective_integrator(cfg, sys, opts);
  const SteadyPoint sp = steady_point(sys, ic);
  const CovarianceMatrix& c = sp.c;
  const SteadyStateResult ss = steady_state_by_integration(DensityMatrix::maximally_mixed(), sys, ic);
  const Mat4& rho = ss.state.matrix();

  ScenarioResult out;
  std::vector<CsvCell> row;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const std::string n = std::to_string(i + 1) + std::to_string(j + 1);
      out.table.header.push_back("C" + n + "_re");
      out.table.header.push_back("C" + n + "_im");
      row.emplace_back(c(i, j).real());
      row.emplace_back(c(i, j).imag());
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const std::string n = std::to_string(i + 1) + std::to_string(j + 1);
      out.table.header.push_back("rho" + n + "_re");
      out.table.header.push_back("rho" + n + "_im");
      row.emplace_back(rho(i, j).real());
      row.emplace_back(rho(i, j).imag());
    }
  }
  out.table.header.insert(out.table.header.end(), {"J1", "J2", "Sigma_dot", "status"});
  row.insert(row.end(), {sp.j1, sp.j2, sp.sigma_dot, sp.status});
  out.table.add_row(std::move(row));
  return out;
}

template <class Point, class Fill>
void sweep(std::size_t n, const RunOptions& opts, CsvTable& table, Point&& point, Fill&& fill) {
  std::vector<std::vector<CsvCell>> rows(n);
  parallel_for(n, opts.threads, [&](std::size_t k) { rows[k] = fill(k, point(k)); });
  for (auto& r : rows) table.add_row(std::move(r));
}

struct PointOutcome {
  std::string status;
  double a = std::nan("");
  double b = std::nan("");
};

ScenarioResult run_sweep_boundary(const ScenarioConfig& cfg, const RunOptions& opts) {
  ScenarioResult out;
  out.table.header = {"T1_over_T2", "eps1_over_eps2", "Sigma_dot_ss", "status"};
  const std::size_t nt = cfg.t_ratio.size();
  const std::size_t ne = cfg.eps_ratio.size();
  auto point = [&](std::size_t k) {
    SystemConfig s = cfg.system;
    s.bath1.temperature = cfg.t_ratio[k / ne] * s.bath2.temperature;
    s.qubit1.epsilon = cfg.eps_ratio[k % ne] * s.qubit2.epsilon;
    try {
      const SteadyPoint p = steady_point(s, effective_integrator(cfg, s, opts));
      return PointOutcome{p.status, p.sigma_dot};
    } catch (const std::exception& e) {
      return PointOutcome{failure(e)};
    }
  };
  sweep(nt * ne, opts, out.table, point, [&](std::size_t k, const PointOutcome& p) {
    return std::vector<CsvCell>{cfg.t_ratio[k / ne], cfg.eps_ratio[k % ne], p.a, p.status};
  });
  return out;
}

ScenarioResult run_sweep_detuning(const ScenarioConfig& cfg, const RunOptions& opts) {
  ScenarioResult out;
  out.table.header = {"delta_eps", "J1_ss", "status"};
  auto point = [&](std::size_t k) {
    SystemConfig s = cfg.system;
    s.qubit1.epsilon = s.qubit2.epsilon + cfg.delta_eps[k];
    try {
      const SteadyPoint p = steady_point(s, effective_integrator(cfg, s, opts));
      return PointOutcome{p.status, p.j1};
    } catch (const std::exception& e) {
      return PointOutcome{failure(e)};
    }
  };
  sweep(cfg.delta_eps.size(), opts, out.table, point, [&](std::size_t k, const PointOutcome& p) {
    return std::vector<CsvCell>{cfg.delta_eps[k], p.a, p.status};
  });
  return out;
}

ScenarioResult run_sweep_scaling(const ScenarioConfig& cfg, const RunOptions& opts) {
  ScenarioResult out;
  const bool zeta = cfg.scaling_axis == ScalingAxis::kZeta2;
  out.table.header = {zeta ? "zeta2" : "lambda2", "J1_ss_abs", "status"};
  auto point = [&](std::size_t k) {
    SystemConfig s = cfg.system;
    if (zeta) {
      s.zeta2 = cfg.scaling_values[k];
    } else {
      s.lambda = std::sqrt(cfg.scaling_values[k]);
    }
    try {
      const SteadyPoint p = steady_point(s, effective_integrator(cfg, s, opts));
      return PointOutcome{p.status, std::abs(p.j1)};
    } catch (const std::exception& e) {
      return PointOutcome{failure(e)};
    }
  };
  sweep(cfg.scaling_values.size(), opts, out.table, point, [&](std::size_t k, const PointOutcome& p) {
    return std::vector<CsvCell>{cfg.scaling_values[k], p.a, p.status};
  });
  return out;
}

ScenarioResult run_relaxation(const ScenarioConfig& cfg, const RunOptions& opts) {
  ScenarioResult out;
  out.table.header = {"zeta2", "tau0", "tau_r", "ratio", "status"};
  auto point = [&](std::size_t k) {
    SystemConfig s = cfg.system;
    s.zeta2 = cfg.zeta2_values[k];
    try {
      const RelaxationPoint p =
          relaxation_point(s, effective_integrator(cfg, s, opts), cfg.horizon_factor, cfg.record_interval);
      return std::pair{p, std::string{}};
    } catch (const std::exception& e) {
      return std::pair{RelaxationPoint{}, failure(e)};
    }
  };
  sweep(cfg.zeta2_values.size(), opts, out.table, point,
        [&](std::size_t k, const std::pair<RelaxationPoint, std::string>& p) {
          const double nan = std::nan("");
          if (!p.second.empty()) return std::vector<CsvCell>{cfg.zeta2_values[k], nan, nan, nan, p.second};
          const RelaxationPoint& r = p.first;
          const bool found = r.status == "found";
          return std::vector<CsvCell>{cfg.zeta2_values[k], found ? r.tau0 : nan, r.tau_r,
                                      found ? r.tau0 / r.tau_r : nan, r.status};
        });
  return out;
}

}  // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n && !failed; k = next++) {
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

SteadyPoint steady_point(const SystemConfig& cfg, const IntegratorConfig& icfg) {
  const DriftDiffusion dd = drift_diffusion(cfg);
  const Eigen::Vector2cd ev = eigenvalues(dd.w);
  SteadyPoint p;
  if (std::abs(ev(0) - ev(1)) < 1e-10) {
    const SteadyStateResult ss = steady_state_by_integration(DensityMatrix::maximally_mixed(), cfg, icfg);
    p.status = "fallback_integration";
    p.c = covariance_from_density(ss.state);
    p.j1 = heat_current(1, ss.state, 0.0, cfg).total;
    p.j2 = heat_current(2, ss.state, 0.0, cfg).total;
  } else {
    p.status = "ok";
    p.c = steady_covariance(dd);
    const HeatCurrents j = steady_heat_currents(p.c, cfg);
    p.j1 = j.j1;
    p.j2 = j.j2;
  }
  p.sigma_dot = -(cfg.bath(1).beta() * p.j1 + cfg.bath(2).beta() * p.j2);
  return p;
}

RelaxationPoint relaxation_point(const SystemConfig& cfg, const IntegratorConfig& icfg,
                                 double horizon_factor, double record_interval) {
  RelaxationPoint p;
  p.tau_r = relaxation_time(drift_diffusion(cfg));
  IntegratorConfig ic = icfg;
  const double h = ic.step_for(cfg);
  ic.record_stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(record_interval / h)));
  const Trajectory traj = integrate(DensityMatrix::maximally_mixed(), horizon_factor * p.tau_r, cfg, ic);
  const CrossingResult cr = find_tau0(traj, cfg, ic);
  p.status = to_string(cr.status);
  p.tau0 = cr.tau0;
  return p;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts) {
  if (!cfg.kind) throw ContractViolation("run_scenario: scenario kind is not set");
  cfg.system.validate();
  ScenarioResult out;
  switch (*cfg.kind) {
    case ScenarioKind::kEvolve: out = run_trajectory(cfg, opts, false); break;
    case ScenarioKind::kDriven: out = run_trajectory(cfg, opts, true); break;
    case ScenarioKind::kSteady: out = run_steady(cfg, opts); break;
    case ScenarioKind::kSweepBoundary: out = run_sweep_boundary(cfg, opts); break;
    case ScenarioKind::kSweepDetuning: out = run_sweep_detuning(cfg, opts); break;
    case ScenarioKind::kSweepScaling: out = run_sweep_scaling(cfg, opts); break;
    case ScenarioKind::kRelaxation: out = run_relaxation(cfg, opts); break;
  }
  const auto w = cfg.system.warnings();
  out.warnings.insert(out.warnings.begin(), w.begin(), w.end());
  return out;
}

}  // namespace tdlme
