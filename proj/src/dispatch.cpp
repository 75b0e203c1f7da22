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

#include "series.hpp"
#include "zetae/compensated_sum.hpp"
#include "zetae/errors.hpp"
#include "zetae/special_numbers.hpp"
#include "zetae/zeta_eval.hpp"

#include <cmath>
#include <string>

namespace zetae {

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::oracle:
      return "oracle";
    case Method::asymptotic:
      return "asymptotic";
    case Method::shifted_asymptotic:
      return "shifted_asymptotic";
    case Method::special_value:
      return "special_value";
    case Method::explicit_neg_int:
      return "explicit_neg_int";
  }
  return "asymptotic";
}

Method method_from_string(std::string_view name) {
  for (Method m : {Method::oracle, Method::asymptotic, Method::shifted_asymptotic,
                   Method::special_value, Method::explicit_neg_int}) {
    if (to_string(m) == name) return m;
  }
  throw domain_error("unknown method name '" + std::string(name) + "'");
}

double regime_threshold(std::complex<double> z) { return std::max(kRegimeMinQ, 2.0 * std::abs(z)); }

ShiftResult shift_reduce(std::complex<double> z, double q, int m, double threshold) {
  if (!(q > 0.0) || !std::isfinite(q)) throw domain_error("q must be a finite real > 0");
  if (m < 0) throw domain_error("derivative order must be non-negative");
  ShiftResult r;
  const int steps = q >= threshold ? 0 : static_cast<int>(std::ceil(threshold - q));
  ComplexCompensatedSum sum;
  for (int j = 0; j < steps; ++j) {
    const double x = q + j;
    const double lx = std::log(x);
    std::complex<double> t = std::exp(-z * lx);
    for (int i = 0; i < m; ++i) t *= -lx;
    sum.add(j % 2 == 0 ? t : -t);
  }
  r.partial_sum = sum.value();
  r.magnitude = sum.magnitude();
  r.steps = steps;
  r.shifted_q = q + steps;
  r.sign = steps % 2 == 0 ? 1 : -1;
  return r;
}

namespace {

bool meets(const EvalResult& r, double target) {
  return r.error_estimate <= target * std::abs(r.value);
}

EvalResult asymptotic_with_shift(const EvalRequest& req, double threshold) {
  const ShiftResult shift = shift_reduce(req.z, req.q, req.m, threshold);
  EvalResult r = zeta_e_asymptotic_ladder(req.z, shift.shifted_q, req.m, req.policy)[req.m];
  if (shift.steps == 0) return r;
  const std::complex<double> tail = static_cast<double>(shift.sign) * r.value;
  r.value = shift.partial_sum + tail;
  r.error_estimate += detail::kRoundingFactor * (shift.magnitude + std::abs(tail));
  r.method = Method::shifted_asymptotic;
  return r;
}

}  // namespace

EvalResult evaluate(const EvalRequest& req) {
  if (!(req.q > 0.0) || !std::isfinite(req.q)) throw domain_error("q must be a finite real > 0");
  if (req.m < 0) throw domain_error("derivative order must be non-negative");
  if (req.m > kMaxDerivativeOrder) {
    throw capability_error("derivative order " + std::to_string(req.m) +
                           " exceeds supported maximum " + std::to_string(kMaxDerivativeOrder));
  }
  if (!(req.target_accuracy > 0.0)) throw domain_error("target accuracy must be positive");

  if (req.m == 0 && is_nonpositive_integer(req.z) &&
      -req.z.real() <= static_cast<double>(kDefaultMaxEulerIndex)) {
    return zeta_e_special_value(static_cast<int>(-req.z.real()), req.q);
  }

  const double threshold = regime_threshold(req.z);
  EvalResult best = asymptotic_with_shift(req, threshold);
  if (meets(best, req.target_accuracy)) return best;

  const EvalResult raised = asymptotic_with_shift(req, 2.0 * threshold);
  if (raised.error_estimate < best.error_estimate) best = raised;
  if (meets(best, req.target_accuracy)) return best;

  if (req.z.real() > 0.0) {
    try {
      const EvalResult oracle = zeta_e_oracle(req.z, req.q, req.m, req.target_accuracy);
      return oracle;
    } catch (const accuracy_error& e) {
      if (e.best_value() && e.achieved_estimate() < best.error_estimate) {
        best.value = *e.best_value();
        best.error_estimate = e.achieved_estimate();
        best.method = Method::oracle;
      }
    }
  }
  best.warning = "requested accuracy not reached: estimate " + std::to_string(best.error_estimate);
  return best;
}

}  // namespace zetae
