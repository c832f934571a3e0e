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

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tdlme/config.hpp"
#include "tdlme/errors.hpp"
#include "tdlme/scenarios.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNumerical = 2;

struct Options {
  std::string config;
  std::string out;
  unsigned threads = 0;
  std::optional<double> step;
};

int run(tdlme::ScenarioKind kind, const Options& o) {
  tdlme::ScenarioConfig cfg;
  try {
    cfg = tdlme::load_config(o.config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  if (cfg.kind && *cfg.kind != kind) {
    std::cerr << "error: config declares scenario '" << tdlme::to_string(*cfg.kind)
              << "' but the subcommand is '" << tdlme::to_string(kind) << "'\n";
    return kInvalid;
  }
  cfg.kind = kind;
  if (o.step && !(*o.step > 0.0)) {
    std::cerr << "error: --step must be positive\n";
    return kInvalid;
  }

  tdlme::RunOptions ro;
  ro.threads = o.threads;
  ro.step = o.step;
  tdlme::ScenarioResult result;
  try {
    result = tdlme::run_scenario(cfg, ro);
  } catch (const tdlme::ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const tdlme::UnsupportedConfiguration& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const tdlme::IntegrationError& e) {
    std::cerr << "numerical failure at t = " << e.time() << ": " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

  const std::string path = o.out.empty() ? cfg.output : o.out;
  try {
    tdlme::emit_csv(result.table, path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit time-dependent local master equation simulator"};
  app.require_subcommand(1);

  Options opts;
  struct Command {
    const char* name;
    tdlme::ScenarioKind kind;
    const char* help;
  };
  const Command commands[] = {
      {"evolve", tdlme::ScenarioKind::kEvolve, "Trajectory from I/4 with heat currents and entropy production"},
      {"driven", tdlme::ScenarioKind::kDriven, "Driven trajectory with effective-temperature deviations"},
      {"steady", tdlme::ScenarioKind::kSteady, "Steady covariance, steady state and currents"},
      {"sweep-boundary", tdlme::ScenarioKind::kSweepBoundary, "Steady entropy production over T1/T2 x eps1/eps2"},
      {"sweep-detuning", tdlme::ScenarioKind::kSweepDetuning, "Steady J1 against eps1 - eps2"},
      {"sweep-scaling", tdlme::ScenarioKind::kSweepScaling, "Steady |J1| against zeta2 or lambda2"},
      {"relaxation", tdlme::ScenarioKind::kRelaxation, "Crossing time and relaxation time against zeta2"},
  };
  tdlme::ScenarioKind chosen = tdlme::ScenarioKind::kEvolve;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", opts.config, "Scenario config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out, "Output CSV path (default: stdout)");
    sub->add_option("--threads", opts.threads, "Worker threads for sweeps (default: all)");
    sub->add_option("--step", opts.step, "Override the integrator step");
    sub->callback([&chosen, kind = c.kind] { chosen = kind; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  return run(chosen, opts);
}
