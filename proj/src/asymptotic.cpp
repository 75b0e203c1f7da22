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
#include "zetae/expansion_coeffs.hpp"
#include "zetae/special_numbers.hpp"
#include "zetae/zeta_eval.hpp"

#include <cmath>
#include <string>

namespace zetae {

bool is_nonpositive_integer(std::complex<double> z) noexcept {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

namespace {

void check_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw domain_error("q must be a finite real > 0");
}

void check_order(int m) {
  if (m < 0) throw domain_error("derivative order must be non-negative");
  if (m > kMaxDerivativeOrder) {
    throw capability_error("derivative order " + std::to_string(m) + " exceeds supported maximum " +
                           std::to_string(kMaxDerivativeOrder));
  }
}

}  // namespace

std::vector<EvalResult> zeta_e_asymptotic_ladder(std::complex<double> z, double q, int m,
                                                 const TruncationPolicy& policy) {
  check_q(q);
  check_order(m);
  const double log_q = std::log(q);
  const std::complex<double> q_pow = std::exp(-z * log_q);  // q^{-z}
  CoefficientCache cache(z);

  // -1/2 c_{k,order}(z) q^{-z-k}; q^{-k} via exp so it underflows cleanly.
  auto tail_term = [&](int order) {
    return [&, order](int k) -> std::complex<double> {
      const std::complex<double> c = cache.coefficient(k, order);
      if (c == 0.0) return 0.0;
      return -0.5 * c * q_pow * std::exp(-k * log_q);
    };
  };

  std::vector<EvalResult> out(m + 1);
  std::vector<double> log_pow(m + 1, 1.0);
  for (int j = 1; j <= m; ++j) log_pow[j] = log_pow[j - 1] * log_q;

  for (int order = 0; order <= m; ++order) {
    std::complex<double> head = 0.0;
    double head_mag = 0.0;
    double propagated = 0.0;
    if (order == 0) {
      const std::complex<double> a = 0.5 * q_pow;
      const std::complex<double> b = 0.25 * z * q_pow / q;
      head = a + b;
      head_mag = std::abs(a) + std::abs(b);
    } else {
      // order 1 carries the extra q^{-z-1}/4 term; orders >= 2 do not.
      if (order == 1) {
        const std::complex<double> a = 0.25 * q_pow / q;
        head += a;
        head_mag += std::abs(a);
      }
      double binom = 1.0;
      for (int j = 1; j <= order; ++j) {
        binom = binom * (order - j + 1) / j;
        const std::complex<double> piece = -binom * out[order - j].value * log_pow[j];
        head += piece;
        head_mag += std::abs(piece);
        propagated += binom * out[order - j].error_estimate * std::fabs(log_pow[j]);
      }
    }
    const int terminal =
        order == 0 && is_nonpositive_integer(z) ? static_cast<int>(-z.real()) : -1;
    const double reference = std::max(head_mag, std::abs(q_pow) * 1e-300);
    const detail::TailSum tail =
        detail::sum_tail(tail_term(order), 2, policy, q, reference, terminal);

    EvalResult& r = out[order];
    r.value = head + tail.value;
    r.error_estimate =
        tail.first_omitted + propagated + detail::kRoundingFactor * (head_mag + tail.magnitude);
    r.terms_used = std::max(tail.last_index, 0);
    r.method = Method::asymptotic;
  }
  return out;
}

EvalResult zeta_e_asymptotic(std::complex<double> z, double q, const TruncationPolicy& policy) {
  return zeta_e_asymptotic_ladder(z, q, 0, policy)[0];
}

EvalResult zeta_e_deriv1_asymptotic(std::complex<double> z, double q,
                                    const TruncationPolicy& policy) {
  return zeta_e_asymptotic_ladder(z, q, 1, policy)[1];
}

EvalResult zeta_e_deriv_m_asymptotic(std::complex<double> z, double q, int m,
                                     const TruncationPolicy& policy) {
  if (m < 2) throw domain_error("zeta_e_deriv_m_asymptotic requires m >= 2");
  check_order(m);
  return zeta_e_asymptotic_ladder(z, q, m, policy)[m];
}

}  // namespace zetae
