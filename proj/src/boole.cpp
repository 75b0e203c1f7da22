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

#include "zetae/boole.hpp"

#include "zetae/compensated_sum.hpp"
#include "zetae/errors.hpp"
#include "zetae/expansion_coeffs.hpp"
#include "zetae/gauss_legendre.hpp"
#include "zetae/kernels/kernels.hpp"
#include "zetae/special_numbers.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace zetae {

std::complex<double> SmoothFunction::operator()(double t, int order) const {
  if (order < 0 || order > max_order) {
    throw capability_error("derivative of order " + std::to_string(order) +
                           " not available (max " + std::to_string(max_order) + ")");
  }
  return eval(t, order);
}

SmoothFunction power_function(std::complex<double> z, double q, int max_order) {
  return {[z, q](double t, int j) {
            const std::complex<double> p = pochhammer(z, j);
            const std::complex<double> v = p * std::exp(-(z + double(j)) * std::log(t + q));
            return (j % 2 == 0) ? v : -v;
          },
          max_order};
}

SmoothFunction polynomial_function(std::vector<double> coeffs) {
  return {[c = std::move(coeffs)](double t, int j) -> std::complex<double> {
            // j-th derivative: sum_{i>=j} c_i i!/(i-j)! t^{i-j}, Horner from the top.
            double p = 0.0;
            for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(j);) {
              double falling = 1.0;
              for (std::size_t r = 0; r < static_cast<std::size_t>(j); ++r) {
                falling *= static_cast<double>(i - r);
              }
              p = p * t + c[i] * falling;
            }
            return {p, 0.0};
          },
          std::numeric_limits<int>::max()};
}

namespace {

constexpr double kQuadratureRelTol = 1e-12;

double inverse_factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r /= i;
  return r;
}

struct Panel {
  std::complex<double> value;
  double magnitude;
};

// int_a^b Ebar_N(-t) f^{(N+1)}(t) dt with [a, b] inside one unit cell
// (j, j+1), on which Ebar_N(-t) = (-1)^{j+1} E_N(j + 1 - t).
Panel panel(const SmoothFunction& f, const EulerPolynomial& en, int cell, double a, double b) {
  const auto& rule = GaussLegendre::order32();
  constexpr int kNodes = 32;
  std::array<double, kNodes> t{};
  std::array<double, kNodes> w{};
  std::array<double, kNodes> shifted{};
  std::array<double, kNodes> kernel{};
  std::array<double, kNodes> re{};
  std::array<double, kNodes> im{};
  rule.map_to(a, b, t, w);
  for (int i = 0; i < kNodes; ++i) shifted[i] = static_cast<double>(cell) + 1.0 - t[i];
  en.evaluate(shifted, kernel);
  const double sign = (cell + 1) % 2 == 0 ? 1.0 : -1.0;
  const int order = en.degree() + 1;
  double magnitude = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    const std::complex<double> g = f(t[i], order);
    kernel[i] *= sign * w[i];
    re[i] = g.real();
    im[i] = g.imag();
    magnitude += std::fabs(kernel[i]) * std::abs(g);
  }
  return {kernels::weighted_sum(kernel, re, im), magnitude};
}

struct Quadrature {
  std::complex<double> value;
  double estimate;
  bool converged;
};

Quadrature remainder_quadrature(const SmoothFunction& f, int n_terms, int alpha, int beta,
                                RemainderScale scale) {
  const EulerPolynomial& en = euler_polynomial_of(n_terms);
  ComplexCompensatedSum coarse;
  ComplexCompensatedSum fine;
  double magnitude = 0.0;
  for (int cell = alpha; cell < beta; ++cell) {
    const double a = cell;
    const double b = cell + 1.0;
    const double mid = cell + 0.5;
    coarse.add(panel(f, en, cell, a, b).value);
    const Panel left = panel(f, en, cell, a, mid);
    const Panel right = panel(f, en, cell, mid, b);
    fine.add(left.value);
    fine.add(right.value);
    magnitude += left.magnitude + right.magnitude;
  }
  double factor = inverse_factorial(n_terms);
  if (scale == RemainderScale::lemma1) factor *= 0.5;
  const double estimate = std::abs(fine.value() - coarse.value());
  const bool converged =
      estimate <= kQuadratureRelTol * magnitude + std::numeric_limits<double>::min();
  return {factor * fine.value(), factor * estimate, converged};
}

}  // namespace

std::complex<double> boole_remainder(const SmoothFunction& f, int n_terms, int alpha, int beta,
                                     RemainderScale scale) {
  if (n_terms < 0) throw domain_error("boole_remainder: N must be non-negative");
  if (alpha >= beta) throw domain_error("boole_remainder: requires alpha < beta");
  if (n_terms + 1 > f.max_order) {
    throw capability_error("boole_remainder: f must supply derivatives up to order N+1");
  }
  const Quadrature q = remainder_quadrature(f, n_terms, alpha, beta, scale);
  if (!q.converged) {
    throw accuracy_error("boole_remainder: quadrature did not converge", q.estimate);
  }
  return q.value;
}

BooleReport boole_sum(const SmoothFunction& f, int alpha, int beta, int n_terms) {
  if (n_terms < 1) throw domain_error("boole_sum: N must be positive");
  if (alpha >= beta) throw domain_error("boole_sum: requires alpha < beta");
  if (n_terms + 1 > f.max_order) {
    throw capability_error("boole_sum: f must supply derivatives up to order N+1");
  }
  const auto& euler = EulerNumberTable::instance();

  ComplexCompensatedSum lhs;
  for (int n = alpha; n < beta; ++n) {
    const std::complex<double> v = 2.0 * f(n, 0);
    lhs.add(n % 2 == 0 ? v : -v);
  }

  const double sign_beta = (beta - 1) % 2 == 0 ? 1.0 : -1.0;
  const double sign_alpha = alpha % 2 == 0 ? 1.0 : -1.0;
  ComplexCompensatedSum main;
  for (int k = 0; k <= n_terms; ++k) {
    const double ek = euler.approx(k);
    if (ek == 0.0) continue;
    const std::complex<double> bracket = sign_beta * f(beta, k) + sign_alpha * f(alpha, k);
    main.add(ek * inverse_factorial(k) * bracket);
  }

  BooleReport report;
  report.lhs = lhs.value();
  report.rhs_main = main.value();
  report.remainder = boole_remainder(f, n_terms, alpha, beta, RemainderScale::boole);
  report.residual = std::abs(report.lhs - report.rhs_main - report.remainder);
  return report;
}

EvalResult lemma1_value(const SmoothFunction& f, int n_terms) {
  if (n_terms < 1) throw domain_error("lemma1_value: N must be positive");
  if (n_terms + 1 > f.max_order) {
    throw capability_error("lemma1_value: f must supply derivatives up to order N+1");
  }
  const auto& euler = EulerNumberTable::instance();
  auto delta = [&f](int k) { return f(1.0, k) + f(0.0, k); };

  ComplexCompensatedSum sum;
  sum.add(0.5 * delta(0));
  sum.add(-0.25 * delta(1));
  for (int k = 2; k <= n_terms; ++k) {
    const double ek = euler.approx(k);
    if (ek == 0.0) continue;
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    sum.add(-0.5 * sign * inverse_factorial(k) * ek * delta(k));
  }

  EvalResult result;
  result.method = Method::oracle;
  result.terms_used = n_terms;
  const Quadrature r = remainder_quadrature(f, n_terms, 0, 1, RemainderScale::lemma1);
  if (!r.converged) result.warning = "remainder quadrature did not converge";
  sum.add(r.value);
  result.value = sum.value();
  result.error_estimate = r.estimate + 4.0 * std::numeric_limits<double>::epsilon() * sum.magnitude();
  return result;
}

}  // namespace zetae
