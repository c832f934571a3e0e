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

#include "tdlme/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tdlme {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size() && !s.empty();
}

struct Entry {
  std::string value;
  std::size_t line;
  std::size_t column;      // of the value
  std::size_t key_column;
};

using Sections = std::map<std::string, std::map<std::string, Entry>>;

bool valid_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

Sections tokenize(std::string_view text, const std::string& source) {
  Sections out;
  std::string current;
  bool in_section = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const char lead = line[first];
    if (lead == '#' || lead == ';') continue;

    if (lead == '[') {
      const auto close = line.find(']', first);
      if (close == std::string_view::npos) {
        throw ParseError(source, line_no, first + 1, "unterminated section header");
      }
      if (!trim(line.substr(close + 1)).empty()) {
        throw ParseError(source, line_no, close + 2, "unexpected text after section header");
      }
      const std::string_view name = trim(line.substr(first + 1, close - first - 1));
      if (name.empty()) throw ParseError(source, line_no, first + 2, "empty section name");
      for (std::size_t k = 0; k < name.size(); ++k) {
        if (!valid_name_char(name[k])) {
          throw ParseError(source, line_no, line.find(name) + k + 1, "invalid character in section name");
        }
      }
      current = std::string(name);
      out[current];
      in_section = true;
      continue;
    }

    const auto eq = line.find('=', first);
    if (eq == std::string_view::npos) {
      throw ParseError(source, line_no, first + 1, "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(first, eq - first));
    if (key.empty()) throw ParseError(source, line_no, first + 1, "missing key before '='");
    for (std::size_t k = 0; k < key.size(); ++k) {
      if (!valid_name_char(key[k])) {
        throw ParseError(source, line_no, first + k + 1, "invalid character in key");
      }
    }
    if (!in_section) throw ParseError(source, line_no, first + 1, "key outside of any section");
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    auto& sec = out[current];
    if (sec.count(std::string(key))) {
      throw ParseError(source, line_no, first + 1, "duplicate key '" + std::string(key) + "'");
    }
    const auto value_col = line.find_first_not_of(" \t", eq + 1);
    sec.emplace(std::string(key), Entry{std::string(value), line_no,
                                        value_col == std::string_view::npos ? eq + 2 : value_col + 1, first + 1});
  }
  return out;
}

class Reader {
 public:
  explicit Reader(Sections s) : sections_(std::move(s)) {}

  bool has_section(const std::string& sec) const { return sections_.count(sec) != 0; }

  const Entry* find(const std::string& sec, const std::string& key) {
    auto s = sections_.find(sec);
    if (s == sections_.end()) return nullptr;
    auto k = s->second.find(key);
    if (k == s->second.end()) return nullptr;
    used_.insert(sec + "." + key);
    return &k->second;
  }

  void number(const std::string& sec, const std::string& key, double& target, bool required) {
    const Entry* e = find(sec, key);
    if (!e) {
      if (required && has_section(sec)) fail(sec + "." + key, "required key is missing");
      return;
    }
    double v = 0.0;
    if (!parse_double(e->value, v) || !std::isfinite(v)) {
      fail(sec + "." + key, "expected a finite number, got '" + e->value + "'", e);
      return;
    }
    target = v;
  }

  void optional_number(const std::string& sec, const std::string& key, std::optional<double>& target) {
    double v = 0.0;
    const std::size_t before = violations_.size();
    if (!find(sec, key)) return;
    number(sec, key, v, false);
    if (violations_.size() == before) target = v;
  }

  void count(const std::string& sec, const std::string& key, std::size_t& target, bool* set = nullptr) {
    const Entry* e = find(sec, key);
    if (!e) return;
    const std::string_view s = trim(e->value);
    std::size_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 1) {
      fail(sec + "." + key, "expected a positive integer, got '" + e->value + "'", e);
      return;
    }
    target = v;
    if (set) *set = true;
  }

  void grid(const std::string& sec, const std::string& key, std::vector<double>& target) {
    const Entry* e = find(sec, key);
    if (!e) return;
    try {
      target = parse_grid(e->value);
    } catch (const std::invalid_argument& ex) {
      fail(sec + "." + key, ex.what(), e);
    }
  }

  const Entry* text(const std::string& sec, const std::string& key) { return find(sec, key); }

  void fail(const std::string& key, const std::string& what, const Entry* e = nullptr) {
    std::string msg = key + ": " + what;
    if (e) msg += " (line " + std::to_string(e->line) + ", column " + std::to_string(e->column) + ")";
    violations_.push_back(msg);
    bad_keys_.insert(key);
  }

  void report_unknown(const std::set<std::string>& known_sections) {
    for (const auto& [sec, keys] : sections_) {
      if (!known_sections.count(sec)) {
        violations_.push_back(sec + ": unknown section");
        continue;
      }
      for (const auto& [key, e] : keys) {
        if (!used_.count(sec + "." + key)) {
          fail(sec + "." + key, "unknown key (line " + std::to_string(e.line) + ", column " +
                                    std::to_string(e.key_column) + ")");
        }
      }
    }
  }

  bool is_bad(const std::string& key) const { return bad_keys_.count(key) != 0; }
  std::vector<std::string>& violations() { return violations_; }

 private:
  Sections sections_;
  std::set<std::string> used_;
  std::set<std::string> bad_keys_;
  std::vector<std::string> violations_;
};

std::vector<double> spaced(double a, double b, std::size_t n, bool log) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1);
    out[k] = log ? std::pow(10.0, x) : x;
  }
  if (n > 1) out.back() = log ? std::pow(10.0, b) : b;
  return out;
}

}  // namespace

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "evolve") return ScenarioKind::kEvolve;
  if (s == "steady") return ScenarioKind::kSteady;
  if (s == "sweep_boundary") return ScenarioKind::kSweepBoundary;
  if (s == "sweep_detuning") return ScenarioKind::kSweepDetuning;
  if (s == "sweep_scaling") return ScenarioKind::kSweepScaling;
  if (s == "relaxation") return ScenarioKind::kRelaxation;
  if (s == "driven") return ScenarioKind::kDriven;
  return std::nullopt;
}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kEvolve: return "evolve";
    case ScenarioKind::kSteady: return "steady";
    case ScenarioKind::kSweepBoundary: return "sweep_boundary";
    case ScenarioKind::kSweepDetuning: return "sweep_detuning";
    case ScenarioKind::kSweepScaling: return "sweep_scaling";
    case ScenarioKind::kRelaxation: return "relaxation";
    case ScenarioKind::kDriven: return "driven";
  }
  return "unknown";
}

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::ostringstream msg;
  msg << "invalid configuration (" << v.size() << (v.size() == 1 ? " problem)" : " problems)");
  for (const auto& s : v) msg << "\n  " << s;
  return msg.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument(join_violations(violations)), violations_(std::move(violations)) {}

std::vector<double> parse_grid(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty grid");
  std::vector<double> out;
  for (const char* fn : {"linspace", "logspace"}) {
    const std::string_view name(fn);
    if (s.substr(0, name.size()) != name) continue;
    const std::string_view rest = trim(s.substr(name.size()));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw std::invalid_argument("expected " + std::string(name) + "(start, stop, count)");
    }
    std::vector<double> args;
    std::string_view inner = rest.substr(1, rest.size() - 2);
    while (true) {
      const auto comma = inner.find(',');
      double v = 0.0;
      if (!parse_double(inner.substr(0, comma), v)) {
        throw std::invalid_argument("bad number in " + std::string(name) + " arguments");
      }
      args.push_back(v);
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
    if (args.size() != 3 || args[2] < 1 || args[2] != std::floor(args[2])) {
      throw std::invalid_argument(std::string(name) + " needs (start, stop, integer count >= 1)");
    }
    out = spaced(args[0], args[1], static_cast<std::size_t>(args[2]), name == "logspace");
    break;
  }
  if (out.empty()) {
    std::string_view rest = s;
    while (true) {
      const auto comma = rest.find(',');
      double v = 0.0;
      if (!parse_double(rest.substr(0, comma), v)) {
        throw std::invalid_argument("bad grid entry '" + std::string(trim(rest.substr(0, comma))) + "'");
      }
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  for (double v : out) {
    if (!std::isfinite(v)) throw std::invalid_argument("grid contains a non-finite value");
  }
  return out;
}

ScenarioConfig parse_config(std::string_view text, const std::string& source) {
  Reader r(tokenize(text, source));
  ScenarioConfig cfg;
  SystemConfig& sys = cfg.system;

  if (!r.has_section("system")) r.violations().push_back("system: missing section");
  if (!r.has_section("bath1")) r.violations().push_back("bath1: missing section");
  if (!r.has_section("bath2")) r.violations().push_back("bath2: missing section");

  r.number("system", "epsilon1", sys.qubit1.epsilon, true);
  r.number("system", "epsilon2", sys.qubit2.epsilon, true);
  r.number("system", "lambda", sys.lambda, true);
  r.number("system", "zeta2", sys.zeta2, true);
  r.number("system", "k_b", sys.k_b, false);
  for (int i = 1; i <= 2; ++i) {
    const std::string n = std::to_string(i);
    BathParams& b = i == 1 ? sys.bath1 : sys.bath2;
    r.number("bath" + n, "temperature", b.temperature, true);
    r.number("bath" + n, "kappa", b.kappa, true);
    r.number("bath" + n, "cutoff", b.cutoff, true);
    QubitParams& q = i == 1 ? sys.qubit1 : sys.qubit2;
    r.number("drive", "amplitude" + n, q.drive_amplitude, false);
    r.number("drive", "frequency" + n, q.drive_frequency, false);
  }

  IntegratorConfig& ic = cfg.integrator;
  r.optional_number("integrator", "step", ic.step);
  r.count("integrator", "record_stride", ic.record_stride, &cfg.record_stride_set);
  r.number("integrator", "positivity_tol", ic.positivity_tol, false);
  r.number("integrator", "steady_tol", ic.steady_tol, false);
  r.optional_number("integrator", "t_max", ic.t_max);
  r.count("integrator", "steady_check_every", ic.steady_check_every);
  if (const Entry* e = r.text("integrator", "positivity")) {
    cfg.positivity_set = true;
    if (e->value == "enforce") {
      ic.positivity = PositivityPolicy::kEnforce;
    } else if (e->value == "record") {
      ic.positivity = PositivityPolicy::kRecord;
    } else {
      r.fail("integrator.positivity", "expected 'enforce' or 'record', got '" + e->value + "'", e);
    }
  }

  if (const Entry* e = r.text("scenario", "kind")) {
    cfg.kind = parse_scenario_kind(e->value);
    if (!cfg.kind) r.fail("scenario.kind", "unknown scenario '" + e->value + "'", e);
  }
  r.number("scenario", "t_end", cfg.t_end, false);
  r.number("scenario", "record_interval", cfg.record_interval, false);
  r.number("scenario", "horizon_factor", cfg.horizon_factor, false);
  if (const Entry* e = r.text("scenario", "output")) cfg.output = e->value;
  r.grid("scenario", "t1_over_t2", cfg.t_ratio);
  r.grid("scenario", "eps1_over_eps2", cfg.eps_ratio);
  r.grid("scenario", "delta_eps", cfg.delta_eps);
  r.grid("scenario", "values", cfg.scaling_values);
  r.grid("scenario", "zeta2_values", cfg.zeta2_values);
  if (const Entry* e = r.text("scenario", "axis")) {
    if (e->value == "zeta2") {
      cfg.scaling_axis = ScalingAxis::kZeta2;
    } else if (e->value == "lambda2") {
      cfg.scaling_axis = ScalingAxis::kLambda2;
    } else {
      r.fail("scenario.axis", "expected 'zeta2' or 'lambda2', got '" + e->value + "'", e);
    }
  }

  r.report_unknown({"system", "bath1", "bath2", "drive", "scenario", "integrator"});

  for (const auto& v : sys.violations()) {
    const std::string key = v.substr(0, v.find(':'));
    if (!r.is_bad(key)) r.violations().push_back(v);
  }
  auto positive = [&](double v, const std::string& key) {
    if (!(v > 0.0) && !r.is_bad(key)) r.fail(key, "must be positive");
  };
  positive(cfg.t_end, "scenario.t_end");
  positive(cfg.record_interval, "scenario.record_interval");
  positive(cfg.horizon_factor, "scenario.horizon_factor");
  if (ic.step) positive(*ic.step, "integrator.step");
  if (ic.t_max) positive(*ic.t_max, "integrator.t_max");
  positive(ic.steady_tol, "integrator.steady_tol");
  if (!(ic.positivity_tol >= 0.0)) r.fail("integrator.positivity_tol", "must be non-negative");
  auto positive_grid = [&](const std::vector<double>& g, const std::string& key) {
    for (double v : g) {
      if (!(v > 0.0)) {
        r.fail(key, "grid values must be positive");
        return;
      }
    }
  };
  positive_grid(cfg.t_ratio, "scenario.t1_over_t2");
  positive_grid(cfg.eps_ratio, "scenario.eps1_over_eps2");
  positive_grid(cfg.scaling_values, "scenario.values");
  positive_grid(cfg.zeta2_values, "scenario.zeta2_values");
  for (double d : cfg.delta_eps) {
    if (!(sys.qubit2.epsilon + d > 0.0)) {
      r.fail("scenario.delta_eps", "epsilon2 + delta_eps must stay positive");
      break;
    }
  }

  if (!r.violations().empty()) throw ValidationError(std::move(r.violations()));

  if (cfg.t_ratio.empty()) cfg.t_ratio = spaced(1.0, 3.0, 41, false);
  if (cfg.eps_ratio.empty()) cfg.eps_ratio = spaced(0.5, 3.0, 41, false);
  if (cfg.delta_eps.empty()) cfg.delta_eps = spaced(0.0, 10.0, 41, false);
  if (cfg.scaling_values.empty()) cfg.scaling_values = spaced(-4.0, -1.0, 7, true);
  if (cfg.zeta2_values.empty()) cfg.zeta2_values = spaced(0.1, 1.0, 10, false);
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config(buf.str(), path);
}

}  // namespace tdlme
