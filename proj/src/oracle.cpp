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
#include "zetae/errors.hpp"
#include "zetae/kernels/kernels.hpp"
#include "zetae/zeta_eval.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace zetae {

namespace {

// (3 + sqrt 8)^n overflows a double just past n = 400.
constexpr int kOracleTermLimit = 320;
constexpr int kConfirmationTerms = 8;

// Weights w_k such that sum_k (-1)^k a_k ~ sum_{k<n} w_k a_k (Algorithm 1 of
// Cohen, Rodriguez Villegas and Zagier).
std::vector<double> cvz_weights(int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) {
    c = b - c;
    w[k] = c / d;
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return w;
}

struct Accelerated {
  std::complex<double> value;
  double rounding;
};

Accelerated accelerate(const std::vector<double>& re, const std::vector<double>& im,
                       const std::vector<double>& mag, int n) {
  const std::vector<double> w = cvz_weights(n);
  const auto value = kernels::weighted_sum(w, std::span(re).first(n), std::span(im).first(n));
  double rounding = 0.0;
  for (int k = 0; k < n; ++k) rounding += std::fabs(w[k]) * mag[k];
  return {value, 2.0 * std::numeric_limits<double>::epsilon() * rounding};
}

}  // namespace

EvalResult zeta_e_oracle(std::complex<double> z, double q, int m, double tol) {
  if (!(q > 0.0) || !std::isfinite(q)) throw domain_error("q must be a finite real > 0");
  if (m < 0) throw domain_error("derivative order must be non-negative");
  if (m > kMaxDerivativeOrder) throw capability_error("derivative order exceeds supported maximum");
  if (!(tol > 0.0)) throw domain_error("tolerance must be positive");

  const int budget = std::min(kOracleTermLimit, max_terms_from_env(kOracleTermLimit));
  const double digits = std::clamp(-std::log10(tol), 1.0, 17.0);
  int n = static_cast<int>(std::ceil(1.31 * (digits + 3.0)));
  n = std::min(n, budget - kConfirmationTerms);
  if (n < 2) throw accuracy_error("ZETAE_MAX_TERMS too small for the oracle", INFINITY);

  std::vector<double> re;
  std::vector<double> im;
  std::vector<double> mag;
  auto fill = [&](int count) {
    for (int k = static_cast<int>(re.size()); k < count; ++k) {
      const double x = k + q;
      const double lx = std::log(x);
      std::complex<double> a = std::exp(-z * lx);
      for (int i = 0; i < m; ++i) a *= -lx;
      re.push_back(a.real());
      im.push_back(a.imag());
      mag.push_back(std::abs(a));
    }
  };

  EvalResult best;
  best.method = Method::oracle;
  best.certified = z.real() > 0.0;
  best.error_estimate = INFINITY;
  while (true) {
    const int confirm = n + kConfirmationTerms;
    fill(confirm);
    const Accelerated lo = accelerate(re, im, mag, n);
    const Accelerated hi = accelerate(re, im, mag, confirm);
    const double estimate = std::abs(hi.value - lo.value) + hi.rounding;
    if (estimate < best.error_estimate) {
      best.value = hi.value;
      best.error_estimate = estimate;
      best.terms_used = confirm;
    }
    if (best.error_estimate <= tol * std::abs(best.value)) break;
    const int next = std::min(n + n / 2, budget - kConfirmationTerms);
    if (next <= n) {
      throw accuracy_error("oracle: tolerance not reached within " + std::to_string(budget) +
                               " terms",
                           best.error_estimate, best.value);
    }
    n = next;
  }
  if (!best.certified) best.warning = "empirical continuation (Re z <= 0)";
  return best;
}

}  // namespace zetae
