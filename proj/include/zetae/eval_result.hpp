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

#ifndef ZETAE_EVAL_RESULT_HPP
#define ZETAE_EVAL_RESULT_HPP

#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace zetae {

enum class Method { oracle, asymptotic, shifted_asymptotic, special_value, explicit_neg_int };

std::string_view to_string(Method m) noexcept;
// Throws domain_error for unknown names.
Method method_from_string(std::string_view name);

// Value of one evaluation together with how it was obtained.
struct EvalResult {
  std::complex<double> value{};
  double error_estimate = 0.0;  // >= 0
  int terms_used = 0;           // >= 0
  Method method = Method::asymptotic;
  // False when the oracle ran outside Re(z) > 0 (empirical continuation).
  bool certified = true;
  // Set when the requested accuracy was not reached.
  std::optional<std::string> warning;
};

}  // namespace zetae

#endif  // ZETAE_EVAL_RESULT_HPP
