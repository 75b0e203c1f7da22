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

#ifndef ZETAE_SPECIAL_NUMBERS_HPP
#define ZETAE_SPECIAL_NUMBERS_HPP

#include "zetae/rational.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace zetae {

inline constexpr int kDefaultMaxEulerIndex = 256;

// Exact values E_k(0), k = 0..max_index, where E_k(q) are the Euler
// polynomials of 2e^{qt}/(e^t+1). Built from
//   2 E_n(0) = -sum_{k<n} C(n,k) E_k(0),   E_0(0) = 1,
// which is E_n(q+1) + E_n(q) = 2q^n evaluated at q = 0.
// Immutable after construction.
class EulerNumberTable {
 public:
  explicit EulerNumberTable(int max_index = kDefaultMaxEulerIndex);

  // Process-wide table with max_index = kDefaultMaxEulerIndex, built on first
  // use.
  static const EulerNumberTable& instance();

  int max_index() const noexcept { return static_cast<int>(exact_.size()) - 1; }

  // Throws capacity_error for k > max_index().
  const Rational& exact(int k) const;

  // E_k(0) rounded once to double. Overflows to +-inf for k above ~220.
  double approx(int k) const;

  std::span<const Rational> values() const noexcept { return exact_; }

 private:
  void check(int k) const;

  std::vector<Rational> exact_;
  std::vector<double> approx_;
};

Rational euler_number_at_zero(int k);

// Monic Euler polynomial E_n(q) = sum_k C(n,k) E_k(0) q^{n-k} with exact
// coefficients stored by ascending power of q.
class EulerPolynomial {
 public:
  explicit EulerPolynomial(int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  // Coefficients rounded once to double, ascending powers.
  std::span<const double> coefficients_double() const noexcept { return approx_; }

  double operator()(double q) const;
  Rational operator()(const Rational& q) const;

  // Evaluates at many points with the active Horner kernel.
  void evaluate(std::span<const double> q, std::span<double> out) const;

  // sum_i |c_i| |q|^i: scale of the rounding error of operator()(q).
  double condition_scale(double q) const;

 private:
  std::vector<Rational> coeffs_;
  std::vector<double> approx_;
};

// Shared immutable instance for degree n <= kDefaultMaxEulerIndex.
const EulerPolynomial& euler_polynomial_of(int n);

double euler_polynomial(int n, double q);

// Quasi-periodic extension: Ebar_n(x) = E_n(x) on [0,1) and
// Ebar_n(x+1) = -Ebar_n(x).
double quasi_periodic_euler(int n, double x);

// Partial sum of
//   Ebar_n(x) = (4 n!/pi^{n+1}) sum_{k>=0} sin((2k+1) pi x - pi n/2) / (2k+1)^{n+1}
// over k = 0..terms. Valid for 0 <= x < 1 (0 < x < 1 when n = 0); other x
// throw domain_error.
double fourier_partial_sum(int n, double x, long terms);

}  // namespace zetae

#endif  // ZETAE_SPECIAL_NUMBERS_HPP
