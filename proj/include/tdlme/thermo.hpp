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

#include <vector>

#include "tdlme/dynamics.hpp"
#include "tdlme/model.hpp"

namespace tdlme {

struct HeatCurrent {
  double total = 0.0;
  double bare = 0.0;         // bare subsystem Hamiltonians only
  double interaction = 0.0;  // lambda H_I only
};

/// zeta2 Tr(H_S(t) D_i[rho]) together with its bare and interaction parts.
HeatCurrent heat_current(int i, const Mat4& rho, double t, const SystemConfig& cfg);
inline HeatCurrent heat_current(int i, const DensityMatrix& rho, double t, const SystemConfig& cfg) {
  return heat_current(i, rho.matrix(), t, cfg);
}

/// -Tr(rho ln rho) with the clamped logarithm.
double entropy(const Mat4& rho);
inline double entropy(const DensityMatrix& rho) { return entropy(rho.matrix()); }

/// -zeta2 sum_i Tr(D_i[rho] ln rho).
double entropy_rate(const Mat4& rho, double t, const SystemConfig& cfg);

/// -zeta2 sum_i Tr([ln rho + beta_i H_S(t)] D_i[rho]).
double entropy_production_rate(const Mat4& rho, double t, const SystemConfig& cfg);
inline double entropy_production_rate(const DensityMatrix& rho, double t, const SystemConfig& cfg) {
  return entropy_production_rate(rho.matrix(), t, cfg);
}

struct ThermoRecord {
  double t = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  double js1 = 0.0;
  double ji1 = 0.0;
  double js2 = 0.0;
  double ji2 = 0.0;
  double s = 0.0;
  double sigma_dot = 0.0;
  bool near_pure = false;  // min eigenvalue below 1e-9, so the log clamp may bias sigma_dot
};

/// All observables at one frame, sharing one generator and one logarithm.
ThermoRecord thermo_record(const Mat4& rho, double t, const SystemConfig& cfg);

/// |gamma-/gamma+ - e^{2 beta_i E_i(t)}| / e^{2 beta_i E_i(t)}.
double effective_temperature_check(int i, double t, const SystemConfig& cfg);

enum class CrossingStatus {
  kFound,
  kAlwaysPositive,       // no crossing and the run ended near a fixed point
  kInsufficientHorizon,  // no crossing and the state was still moving
};

const char* to_string(CrossingStatus s);

struct CrossingResult {
  CrossingStatus status = CrossingStatus::kAlwaysPositive;
  double tau0 = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double final_residual = 0.0;
};

struct CrossingOptions {
  double noise_floor = 1e-12;    // |sigma_dot| below this has no sign
  double time_tol = 1e-6;
  double settled_residual = 1e-6;  // max|d rho / dt| separating the two not-found outcomes
};

/// First +/- sign change of sigma_dot along the trajectory, refined by bisection with
/// fresh integration from the last positive frame.
CrossingResult find_tau0(const Trajectory& traj, const SystemConfig& cfg,
                         const IntegratorConfig& icfg, const CrossingOptions& opts = {});

struct PowerLawFit {
  double slope = 0.0;
  double intercept = 0.0;  // of ln y
  double r2 = 0.0;
};

/// Least squares on (ln x, ln y). Throws std::domain_error for non-positive data and
/// ContractViolation for fewer than 3 points.
PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

struct TwoFactorFit {
  double slope_x = 0.0;
  double slope_z = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// ln y = a ln x + b ln z + c by least squares.
TwoFactorFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& zs,
                           const std::vector<double>& ys);

}  // namespace tdlme
