// Copyright 2026 The zetae Authors
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

#ifndef ZETAE_ERRORS_HPP
#define ZETAE_ERRORS_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace zetae {

// Requested index exceeds a fixed table size (e.g. Euler numbers past K_max).
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operation asked for something the implementation does not provide
// (derivative order above the supported range, missing derivative of a
// user-supplied function).
class capability_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical target not met. Carries the error estimate reached and, when
// one exists, the best value computed.
class accuracy_error : public std::runtime_error {
 public:
  accuracy_error(const std::string& what, double achieved_estimate,
                 std::optional<std::complex<double>> best_value = std::nullopt)
      : std::runtime_error(what), achieved_estimate_(achieved_estimate), best_value_(best_value) {}

  double achieved_estimate() const noexcept { return achieved_estimate_; }
  const std::optional<std::complex<double>>& best_value() const noexcept { return best_value_; }

 private:
  double achieved_estimate_;
  std::optional<std::complex<double>> best_value_;
};

}  // namespace zetae

#endif  // ZETAE_ERRORS_HPP
