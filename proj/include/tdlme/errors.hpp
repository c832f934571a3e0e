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

#include <stdexcept>
#include <string>
#include <vector>

namespace tdlme {

// Precondition or shape violation by the caller (non-square input, bad index).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Drift matrix is not Hurwitz.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix expected to be positive semidefinite has a clearly negative eigenvalue.
class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Quadrature or linear solve failed; carries the tolerance actually reached.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double achieved_tolerance = 0.0)
      : std::runtime_error(what), achieved_tolerance_(achieved_tolerance) {}
  double achieved_tolerance() const noexcept { return achieved_tolerance_; }

 private:
  double achieved_tolerance_;
};

// Time stepping produced an invalid state at time().
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double time)
      : std::runtime_error(what), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

// Long-time integration did not reach the requested generator norm.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double final_residual)
      : std::runtime_error(what), final_residual_(final_residual) {}
  double final_residual() const noexcept { return final_residual_; }

 private:
  double final_residual_;
};

// Operation not defined for the given configuration (e.g. Gaussian path on a driven system).
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tdlme
