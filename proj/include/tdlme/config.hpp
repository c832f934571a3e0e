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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tdlme/dynamics.hpp"
#include "tdlme/model.hpp"

namespace tdlme {

enum class ScenarioKind {
  kEvolve,
  kSteady,
  kSweepBoundary,
  kSweepDetuning,
  kSweepScaling,
  kRelaxation,
  kDriven,
};

/// "evolve", "steady", "sweep_boundary", ... (the CLI spelling with '-' is accepted too).
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);
const char* to_string(ScenarioKind kind);

enum class ScalingAxis { kZeta2, kLambda2 };

struct ScenarioConfig {
  std::optional<ScenarioKind> kind;
  SystemConfig system;
  IntegratorConfig integrator;
  bool record_stride_set = false;
  bool positivity_set = false;
  double record_interval = 0.01;  // used to pick a stride when none is given
  double t_end = 20.0;

  std::vector<double> t_ratio;    // sweep_boundary: T1 / T2
  std::vector<double> eps_ratio;  // sweep_boundary: eps1 / eps2
  std::vector<double> delta_eps;  // sweep_detuning: eps1 - eps2
  ScalingAxis scaling_axis = ScalingAxis::kZeta2;
  std::vector<double> scaling_values;
  std::vector<double> zeta2_values;  // relaxation
  double horizon_factor = 8.0;       // relaxation runs to horizon_factor * tau_r

  std::string output;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// "1, 2, 3", "linspace(a, b, n)" or "logspace(a, b, n)" (10^a .. 10^b).
/// Throws std::invalid_argument on malformed or non-finite grids.
std::vector<double> parse_grid(std::string_view text);

/// Parses INI-style text with sections [system], [bath1], [bath2], [drive], [scenario]
/// and [integrator]. Structural problems raise ParseError; every bad, missing or
/// unknown key is gathered into one ValidationError.
ScenarioConfig parse_config(std::string_view text, const std::string& source = "<config>");
ScenarioConfig load_config(const std::string& path);

}  // namespace tdlme
