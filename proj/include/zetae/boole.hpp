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

#ifndef ZETAE_BOOLE_HPP
#define ZETAE_BOOLE_HPP

#include "zetae/eval_result.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace zetae {

// A function f on a real interval together with its derivatives, supplied
// analytically by the caller. eval(t, j) returns f^{(j)}(t) for
// 0 <= j <= max_order.
struct SmoothFunction {
  std::function<std::complex<double>(double t, int order)> eval;
  int max_order = 0;

  std::complex<double> operator()(double t, int order) const;
};

// f(t) = (t + q)^{-z}, f^{(j)}(t) = (-1)^j (z)_j (t + q)^{-z-j}.
SmoothFunction power_function(std::complex<double> z, double q, int max_order);

// Real polynomial with coefficients in ascending powers of t; derivatives of
// every order are available (and vanish above the degree).
SmoothFunction polynomial_function(std::vector<double> coeffs);

// The three pieces of
//   2 sum_{n=alpha}^{beta-1} (-1)^n f(n)
//     = sum_{k=0}^{N} E_k(0)/k! ((-1)^{beta-1} f^{(k)}(beta) + (-1)^alpha f^{(k)}(alpha))
//       + (1/N!) int_alpha^beta Ebar_N(-t) f^{(N+1)}(t) dt.
struct BooleReport {
  std::complex<double> lhs;
  std::complex<double> rhs_main;
  std::complex<double> remainder;
  double residual = 0.0;  // |lhs - rhs_main - remainder|
};

BooleReport boole_sum(const SmoothFunction& f, int alpha, int beta, int n_terms);

enum class RemainderScale {
  boole,   // 1/N! as in the summation formula
  lemma1,  // 1/(2 N!) as in the single-step expansion of f(0)
};

// Remainder integral by order-32 Gauss-Legendre on each unit subinterval,
// where Ebar_N(-t) is a polynomial. Throws accuracy_error if a halved-step
// comparison disagrees by more than the quadrature tolerance.
std::complex<double> boole_remainder(const SmoothFunction& f, int n_terms, int alpha, int beta,
                                     RemainderScale scale = RemainderScale::boole);

// f(0) from
//   1/2 D(0) - 1/4 D'(0) - 1/2 sum_{k=2}^{N} (-1)^k/k! E_k(0) D^{(k)}(0) + R_{N+1},
// D(t) = f(t+1) + f(t), with R_{N+1} by quadrature. error_estimate is the
// quadrature error estimate.
EvalResult lemma1_value(const SmoothFunction& f, int n_terms);

}  // namespace zetae

#endif  // ZETAE_BOOLE_HPP
