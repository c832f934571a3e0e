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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdlme/model.hpp"

namespace tdlme {

enum class PositivityPolicy {
  kEnforce,  // throw IntegrationError on a dip below -positivity_tol
  kRecord,   // keep going and mark the frame
};

struct IntegratorConfig {
  std::optional<double> step;  // default 1e-3 min(1/(2 E_max), 1/(zeta2 gamma_max))
  std::size_t record_stride = 1;
  double positivity_tol = 1e-8;
  double steady_tol = 1e-10;
  std::optional<double> t_max;  // steady-state horizon, default 100 / (zeta2 gamma_min)
  std::size_t steady_check_every = 50;
  PositivityPolicy positivity = PositivityPolicy::kEnforce;

  void validate() const;
  double step_for(const SystemConfig& cfg) const;
  double t_max_for(const SystemConfig& cfg) const;
};

struct StepInfo {
  bool renormalized = false;
  double min_eigenvalue = 0.0;
};

/// One classical Runge-Kutta step of dy/dt = f(t, y) for any Eigen matrix type.
template <class M, class F>
M rk4_raw(const M& y, double t, double h, F&& f) {
  const M k1 = f(t, y);
  const M k2 = f(t + 0.5 * h, M(y + 0.5 * h * k1));
  const M k3 = f(t + 0.5 * h, M(y + 0.5 * h * k2));
  const M k4 = f(t + h, M(y + h * k3));
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// RK4 on a density matrix followed by re-Hermitization, trace renormalization
/// when |Tr - 1| > 1e-12, and a positivity check against icfg.positivity_tol.
template <class F>
Mat4 rk4_step(const Mat4& rho, double t, double h, F&& rhs, const IntegratorConfig& icfg,
              StepInfo* info = nullptr);

struct Trajectory {
  std::vector<double> times;
  std::vector<Mat4> states;
  std::vector<bool> rate_negative;  // any negative rate since the previous frame
  std::vector<bool> positivity_dip; // min eigenvalue below -positivity_tol since the previous frame
  std::vector<double> min_eigenvalue;
  std::size_t renormalizations = 0;
  double step = 0.0;

  std::size_t size() const { return times.size(); }
};

/// Integrates the TDLME (identical to the LME when undriven) from rho0 at t0 to t1,
/// recording t0, every record_stride-th step and t1.
Trajectory integrate(const Mat4& rho0, double t0, double t1, const SystemConfig& cfg,
                     const IntegratorConfig& icfg = {});
Trajectory integrate(const DensityMatrix& rho0, double t_end, const SystemConfig& cfg,
                     const IntegratorConfig& icfg = {});

struct SteadyStateResult {
  DensityMatrix state;
  double time;
  double residual;
};

/// Integrates the undriven generator until max|d rho / dt| < steady_tol.
/// Throws ConvergenceError past t_max and UnsupportedConfiguration when driven.
SteadyStateResult steady_state_by_integration(const DensityMatrix& rho0, const SystemConfig& cfg,
                                              const IntegratorConfig& icfg = {});

// Implementation of the template above.
Mat4 finish_density_step(const Mat4& raw, double t, const IntegratorConfig& icfg, StepInfo* info);

template <class F>
Mat4 rk4_step(const Mat4& rho, double t, double h, F&& rhs, const IntegratorConfig& icfg,
              StepInfo* info) {
  return finish_density_step(rk4_raw(rho, t, h, rhs), t + h, icfg, info);
}

}  // namespace tdlme
