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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdlme/config.hpp"
#include "tdlme/csv.hpp"
#include "tdlme/gaussian.hpp"

namespace tdlme {

struct RunOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::optional<double> step;
};

struct ScenarioResult {
  CsvTable table;
  std::vector<std::string> warnings;
};

/// Runs cfg.kind (which must be set). Sweep points that fail are reported in their
/// status column; single-trajectory scenarios propagate numerical exceptions.
ScenarioResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts = {});

struct SteadyPoint {
  std::string status;  // "ok" or "fallback_integration"
  CovarianceMatrix c;
  double j1 = 0.0;
  double j2 = 0.0;
  double sigma_dot = 0.0;  // -(beta1 J1 + beta2 J2)
};

/// Undriven steady state from the Lyapunov equation, or from long-time integration
/// when the drift eigenvalues are closer than 1e-10.
SteadyPoint steady_point(const SystemConfig& cfg, const IntegratorConfig& icfg = {});

struct RelaxationPoint {
  std::string status;
  double tau0 = 0.0;
  double tau_r = 0.0;
};

/// tau_r from the drift matrix and tau0 from a run starting at I/4 and lasting
/// horizon_factor * tau_r.
RelaxationPoint relaxation_point(const SystemConfig& cfg, const IntegratorConfig& icfg,
                                 double horizon_factor, double record_interval);

/// Calls fn(k) for k in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace tdlme
