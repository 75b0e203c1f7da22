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
#include "zetae/expansion_coeffs.hpp"
#include "zetae/special_numbers.hpp"
#include "zetae/zeta_eval.hpp"

#include <cmath>
#include <string>

namespace zetae {

namespace {

void check_args(int n, double q) {
  if (n < 0) throw domain_error("n must be non-negative");
  if (n > kDefaultMaxEulerIndex) throw capacity_error("n exceeds K_max");
  if (!(q > 0.0) || !std::isfinite(q)) throw domain_error("q must be a finite real > 0");
}

Rational signed_binomial(int n, int j) {
  Rational b(binomial(n, j));
  return j % 2 == 0 ? b : Rational(-b);
}

// sum_{j=0}^{min(n, i-1)} C(n,j) (-1)^j / (i - j)
Rational partial_binomial_sum(int n, int i) {
  Rational s = 0;
  for (int j = 0; j <= std::min(n, i - 1); ++j) s += signed_binomial(n, j) / (i - j);
  return s;
}

// (-1)^n n! / (k (k-1) ... (k-n))
Rational ru16(int n, int k) { return alternating_binomial_closed_form(n, k); }

double power(double q, int e) { return std::pow(q, e); }

Rational frac(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

// value = sum_e (a2 L^2 + a1 L + a0) q^e + sum_{k >= tail_start} E_k(0) (alpha_k L + beta_k) q^{n-k}
struct LogLaurent {
  struct Head {
    int exponent;
    Rational a2, a1, a0;
  };
  int n = 0;
  std::vector<Head> head;
  int tail_start = 2;
  // Indexed by k; entries below tail_start unused.
  std::vector<double> alpha, beta;

  void add_head(int e, const Rational& a2, const Rational& a1, const Rational& a0) {
    for (auto& h : head) {
      if (h.exponent == e) {
        h.a2 += a2;
        h.a1 += a1;
        h.a0 += a0;
        return;
      }
    }
    head.push_back({e, a2, a1, a0});
  }

  EvalResult evaluate(double q, const TruncationPolicy& policy) const {
    const double log_q = std::log(q);
    ComplexCompensatedSum head_sum;
    for (const auto& h : head) {
      const double qe = power(q, h.exponent);
      head_sum.add(to_double(h.a2) * log_q * log_q * qe);
      head_sum.add(to_double(h.a1) * log_q * qe);
      head_sum.add(to_double(h.a0) * qe);
    }
    const auto& euler = EulerNumberTable::instance();
    const int last = static_cast<int>(alpha.size()) - 1;
    auto term = [&](int k) -> std::complex<double> {
      if (k > last) return NAN;
      const double ek = euler.approx(k);
      if (ek == 0.0) return 0.0;
      return ek * (alpha[k] * log_q + beta[k]) * std::exp((n - k) * log_q);
    };
    const double reference = std::max(head_sum.magnitude(), 1e-300);
    const detail::TailSum tail = detail::sum_tail(term, tail_start, policy, q, reference);
    EvalResult r;
    r.value = head_sum.value() + tail.value;
    r.error_estimate =
        tail.first_omitted + detail::kRoundingFactor * (head_sum.magnitude() + tail.magnitude);
    r.terms_used = std::max(tail.last_index, 0);
    r.method = Method::explicit_neg_int;
    return r;
  }
};

void size_tail(LogLaurent& f, const TruncationPolicy& policy, double q) {
  const int cap = policy.effective_cap(q);
  f.alpha.assign(cap + 1, 0.0);
  f.beta.assign(cap + 1, 0.0);
}

// Tail coefficient d_k of zeta_E'(-n, q): the term is d_k q^{n-k}.
std::vector<double> deriv1_tail(int n, int k_max) {
  const auto& euler = EulerNumberTable::instance();
  std::vector<double> d(k_max + 1, 0.0);
  for (int k = std::max(2, n + 1); k <= k_max; ++k) {
    const Rational& ek = euler.exact(k);
    if (ek == 0) continue;
    if (n < 2) {
      d[k] = to_double(-ek * partial_binomial_sum(n, k) / 2);
    } else {
      d[k] = to_double(-ek * ru16(n, k) / 2);
    }
  }
  return d;
}

}  // namespace

EvalResult zeta_e_special_value(int n, double q) {
  check_args(n, q);
  const EulerPolynomial& en = euler_polynomial_of(n);
  EvalResult r;
  r.value = 0.5 * en(q);
  r.error_estimate = detail::kRoundingFactor * (n + 1) * 0.5 * en.condition_scale(q);
  r.terms_used = n + 1;
  r.method = Method::special_value;
  return r;
}

Rational NegIntDeriv1Head::power_coefficient(int exponent) const {
  const auto it = power.find(exponent);
  return it == power.end() ? Rational(0) : it->second;
}

NegIntDeriv1Head deriv1_neg_int_head(int n) {
  if (n < 0) throw domain_error("n must be non-negative");
  if (n > kDefaultMaxEulerIndex) throw capacity_error("n exceeds K_max");
  const auto& euler = EulerNumberTable::instance();
  NegIntDeriv1Head h;
  h.n = n;
  h.power[n - 1] += Rational(1, 4);
  for (int k = 2; k <= n; ++k) {
    const Rational& ek = euler.exact(k);
    if (ek == 0) continue;
    h.power[n - k] += -ek * partial_binomial_sum(n, k) / 2;
  }
  for (const auto& c : euler_polynomial_of(n).coefficients()) h.log_coeff.push_back(-c / 2);
  return h;
}

EvalResult zeta_e_deriv1_neg_int(int n, double q, const TruncationPolicy& policy) {
  check_args(n, q);
  const NegIntDeriv1Head head = deriv1_neg_int_head(n);
  const double log_q = std::log(q);
  ComplexCompensatedSum head_sum;
  for (const auto& [e, c] : head.power) head_sum.add(to_double(c) * power(q, e));
  for (std::size_t p = 0; p < head.log_coeff.size(); ++p) {
    head_sum.add(to_double(head.log_coeff[p]) * log_q * power(q, static_cast<int>(p)));
  }
  const int cap = policy.effective_cap(q);
  const std::vector<double> d = deriv1_tail(n, cap);
  auto term = [&](int k) -> std::complex<double> {
    if (k > cap) return NAN;
    return d[k] == 0.0 ? 0.0 : d[k] * std::exp((n - k) * log_q);
  };
  const double reference = std::max(head_sum.magnitude(), 1e-300);
  const detail::TailSum tail = detail::sum_tail(term, std::max(2, n + 1), policy, q, reference);
  EvalResult r;
  r.value = head_sum.value() + tail.value;
  r.error_estimate =
      tail.first_omitted + detail::kRoundingFactor * (head_sum.magnitude() + tail.magnitude);
  r.terms_used = std::max(tail.last_index, 0);
  r.method = Method::explicit_neg_int;
  return r;
}

std::string_view to_string(SecondDerivForm form) noexcept {
  switch (form) {
    case SecondDerivForm::generic:
      return "generic";
    case SecondDerivForm::explicit_form:
      return "explicit";
    case SecondDerivForm::printed:
      return "printed";
  }
  return "generic";
}

namespace {

EvalResult deriv2_generic(int n, double q, const TruncationPolicy& policy) {
  const double log_q = std::log(q);
  const EvalResult zeta = zeta_e_special_value(n, q);
  const EvalResult d1 = zeta_e_deriv1_neg_int(n, q, policy);
  const std::complex<double> a = -2.0 * d1.value * log_q;
  const std::complex<double> b = -zeta.value * log_q * log_q;
  const int cap = policy.effective_cap(q);
  const std::vector<double> c = c_coefficients_neg_int(2, n, cap);
  auto term = [&](int k) -> std::complex<double> {
    if (k >= static_cast<int>(c.size())) return NAN;
    return c[k] == 0.0 ? 0.0 : -0.5 * c[k] * std::exp((n - k) * log_q);
  };
  const double head_mag = std::abs(a) + std::abs(b);
  const detail::TailSum tail =
      detail::sum_tail(term, 2, policy, q, std::max(head_mag, 1e-300));
  EvalResult r;
  r.value = a + b + tail.value;
  r.error_estimate = tail.first_omitted + 2.0 * std::fabs(log_q) * d1.error_estimate +
                     log_q * log_q * zeta.error_estimate +
                     detail::kRoundingFactor * (head_mag + tail.magnitude);
  r.terms_used = std::max(tail.last_index, 0);
  r.method = Method::explicit_neg_int;
  return r;
}

// n = 0 display with the given tail prefactor.
LogLaurent form_n0(const TruncationPolicy& policy, double q, int prefactor) {
  LogLaurent f;
  f.n = 0;
  f.add_head(0, Rational(1, 2), 0, 0);
  f.add_head(-1, 0, Rational(-1, 2), 0);
  f.tail_start = 3;
  size_tail(f, policy, q);
  for (int k = 3; k < static_cast<int>(f.alpha.size()); ++k) {
    Rational harmonic = 0;
    for (int j = 1; j <= k - 1; ++j) harmonic += frac(1, 1LL * j * (k - j));
    f.alpha[k] = to_double(Rational(prefactor, k));
    f.beta[k] = to_double(-prefactor * harmonic / 2);
  }
  return f;
}

LogLaurent form_n1(const TruncationPolicy& policy, double q) {
  LogLaurent f;
  f.n = 1;
  f.add_head(1, Rational(1, 2), 0, 0);
  f.add_head(0, Rational(-1, 4), Rational(-1, 2), 0);
  f.tail_start = 3;
  size_tail(f, policy, q);
  for (int k = 3; k < static_cast<int>(f.alpha.size()); ++k) {
    Rational s = 0;
    for (int j = 2; j <= k - 1; ++j) s += frac(1, 1LL * (k - j) * j * (j - 1));
    f.alpha[k] = to_double(frac(-1, 1LL * k * (k - 1)));
    f.beta[k] = to_double((s - Rational(1, k - 1)) / 2);
  }
  return f;
}

// Collected closed form for n >= 2.
LogLaurent form_collected(int n, const TruncationPolicy& policy, double q) {
  const auto& euler = EulerNumberTable::instance();
  LogLaurent f;
  f.n = n;
  const auto en = euler_polynomial_of(n).coefficients();
  for (int p = 0; p <= n; ++p) f.add_head(p, en[p] / 2, 0, 0);
  f.add_head(n - 1, 0, Rational(-1, 2), 0);
  for (int k = 2; k <= n; ++k) {
    const Rational& ek = euler.exact(k);
    if (ek == 0) continue;
    Rational log_part = 0;
    Rational plain = 0;
    for (int j1 = 0; j1 <= k - 1; ++j1) {
      log_part += signed_binomial(n, j1) / (k - j1);
      plain -= partial_binomial_sum(n, j1) / (2 * (k - j1));
    }
    f.add_head(n - k, 0, ek * log_part, ek * plain);
  }
  f.tail_start = n + 1;
  size_tail(f, policy, q);
  std::vector<Rational> inner(n + 1);
  for (int j1 = 0; j1 <= n; ++j1) inner[j1] = partial_binomial_sum(n, j1);
  for (int k = n + 1; k < static_cast<int>(f.alpha.size()); ++k) {
    Rational b = 0;
    for (int j1 = 0; j1 <= n; ++j1) b -= inner[j1] / (2 * (k - j1));
    for (int j1 = n + 1; j1 <= k - 1; ++j1) b -= ru16(n, j1) / (2 * (k - j1));
    f.alpha[k] = to_double(ru16(n, k));
    f.beta[k] = to_double(b);
  }
  return f;
}

LogLaurent literal_n2(const TruncationPolicy& policy, double q) {
  LogLaurent f;
  f.n = 2;
  f.add_head(2, Rational(1, 2), 0, 0);
  f.add_head(1, Rational(-1, 2), Rational(-1, 2), 0);
  f.add_head(-1, 0, Rational(1, 12), Rational(-3, 8));
  f.tail_start = 5;
  size_tail(f, policy, q);
  for (int k = 5; k < static_cast<int>(f.alpha.size()); ++k) {
    Rational s = 0;
    for (int j = 3; j <= k - 1; ++j) s += frac(1, 1LL * (k - j) * j * (j - 1) * (j - 2));
    f.alpha[k] = to_double(frac(2, 1LL * k * (k - 1) * (k - 2)));
    f.beta[k] = to_double(-(Rational(1, k - 1) + Rational(5, 2 * (k - 2))) / 2 - s);
  }
  return f;
}

LogLaurent literal_n3(const TruncationPolicy& policy, double q) {
  LogLaurent f;
  f.n = 3;
  f.add_head(3, Rational(1, 2), 0, 0);
  f.add_head(2, Rational(-3, 4), Rational(-1, 2), 0);
  f.add_head(0, Rational(1, 8), Rational(11, 24), Rational(1, 4));
  f.add_head(-2, 0, Rational(1, 40), Rational(1, 48));
  f.tail_start = 7;
  size_tail(f, policy, q);
  for (int k = 7; k < static_cast<int>(f.alpha.size()); ++k) {
    Rational s = 0;
    for (int j = 4; j <= k - 1; ++j) {
      s += frac(3, 1LL * (k - j) * j * (j - 1) * (j - 2) * (j - 3));
    }
    f.alpha[k] = to_double(frac(-6, 1LL * k * (k - 1) * (k - 2) * (k - 3)));
    f.beta[k] = to_double(s - (Rational(1, k - 1) - Rational(5, 2 * (k - 2)) +
                               Rational(11, 6 * (k - 3))) / 2);
  }
  return f;
}

}  // namespace

EvalResult zeta_e_deriv2_neg_int(int n, double q, const TruncationPolicy& policy,
                                 SecondDerivForm form) {
  check_args(n, q);
  switch (form) {
    case SecondDerivForm::generic:
      return deriv2_generic(n, q, policy);
    case SecondDerivForm::explicit_form:
      if (n == 0) return form_n0(policy, q, 1).evaluate(q, policy);
      if (n == 1) return form_n1(policy, q).evaluate(q, policy);
      return form_collected(n, policy, q).evaluate(q, policy);
    case SecondDerivForm::printed:
      switch (n) {
        case 0:
          return form_n0(policy, q, 2).evaluate(q, policy);
        case 1:
          return form_n1(policy, q).evaluate(q, policy);
        case 2:
          return literal_n2(policy, q).evaluate(q, policy);
        case 3:
          return literal_n3(policy, q).evaluate(q, policy);
        default:
          throw capability_error("printed second-derivative displays exist only for n <= 3");
      }
  }
  throw domain_error("unknown SecondDerivForm");
}

}  // namespace zetae
