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

#include "zetae/special_numbers.hpp"

#include "zetae/compensated_sum.hpp"
#include "zetae/errors.hpp"
#include "zetae/kernels/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zetae {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

EulerNumberTable::EulerNumberTable(int max_index) {
  if (max_index < 1) throw domain_error("EulerNumberTable: max_index must be >= 1");
  exact_.reserve(max_index + 1);
  exact_.emplace_back(1);
  // Pascal row C(n, k) updated in place.
  std::vector<BigInt> row{1};
  for (int n = 1; n <= max_index; ++n) {
    row.push_back(1);
    for (int k = n - 1; k >= 1; --k) row[k] += row[k - 1];
    if (n >= 2 && n % 2 == 0) {
      exact_.emplace_back(0);
      continue;
    }
    Rational s = 0;
    for (int k = 0; k < n; ++k) {
      if (k >= 2 && k % 2 == 0) continue;
      s += Rational(row[k]) * exact_[k];
    }
    exact_.push_back(-s / 2);
  }
  approx_.reserve(exact_.size());
  for (const auto& e : exact_) approx_.push_back(to_double(e));
}

const EulerNumberTable& EulerNumberTable::instance() {
  static const EulerNumberTable table(kDefaultMaxEulerIndex);
  return table;
}

void EulerNumberTable::check(int k) const {
  if (k < 0) throw domain_error("Euler number index must be non-negative");
  if (k > max_index()) {
    throw capacity_error("Euler number index " + std::to_string(k) + " exceeds K_max = " +
                         std::to_string(max_index()));
  }
}

const Rational& EulerNumberTable::exact(int k) const {
  check(k);
  return exact_[k];
}

double EulerNumberTable::approx(int k) const {
  check(k);
  return approx_[k];
}

Rational euler_number_at_zero(int k) { return EulerNumberTable::instance().exact(k); }

EulerPolynomial::EulerPolynomial(int degree) {
  const auto& table = EulerNumberTable::instance();
  if (degree < 0) throw domain_error("Euler polynomial degree must be non-negative");
  if (degree > table.max_index()) {
    throw capacity_error("Euler polynomial degree exceeds K_max");
  }
  coeffs_.resize(degree + 1);
  approx_.resize(degree + 1);
  // coefficient of q^p is C(n, n-p) E_{n-p}(0)
  for (int p = 0; p <= degree; ++p) {
    coeffs_[p] = Rational(binomial(degree, degree - p)) * table.exact(degree - p);
    approx_[p] = to_double(coeffs_[p]);
  }
}

double EulerPolynomial::operator()(double q) const {
  double out = 0.0;
  kernels::horner(approx_, std::span<const double>(&q, 1), std::span<double>(&out, 1));
  return out;
}

Rational EulerPolynomial::operator()(const Rational& q) const {
  Rational p = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) p = p * q + coeffs_[i];
  return p;
}

void EulerPolynomial::evaluate(std::span<const double> q, std::span<double> out) const {
  kernels::horner(approx_, q, out);
}

double EulerPolynomial::condition_scale(double q) const {
  double s = 0.0;
  const double aq = std::fabs(q);
  for (std::size_t i = approx_.size(); i-- > 0;) s = s * aq + std::fabs(approx_[i]);
  return s;
}

const EulerPolynomial& euler_polynomial_of(int n) {
  static std::array<std::once_flag, kDefaultMaxEulerIndex + 1> flags;
  static std::array<std::unique_ptr<EulerPolynomial>, kDefaultMaxEulerIndex + 1> polys;
  if (n < 0) throw domain_error("Euler polynomial degree must be non-negative");
  if (n > kDefaultMaxEulerIndex) throw capacity_error("Euler polynomial degree exceeds K_max");
  std::call_once(flags[n], [n] { polys[n] = std::make_unique<EulerPolynomial>(n); });
  return *polys[n];
}

double euler_polynomial(int n, double q) { return euler_polynomial_of(n)(q); }

double quasi_periodic_euler(int n, double x) {
  const double shift = std::floor(x);
  const double frac = x - shift;
  const double v = euler_polynomial(n, frac);
  return std::fmod(shift, 2.0) == 0.0 ? v : -v;
}

namespace {

// sin(pi t) with the argument reduced modulo 2 first, so integer t gives an
// exact zero.
double sin_pi(double t) {
  double r = std::fmod(t, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

}  // namespace

double fourier_partial_sum(int n, double x, long terms) {
  if (n < 0) throw domain_error("fourier_partial_sum: n must be non-negative");
  if (terms < 0) throw domain_error("fourier_partial_sum: term count must be non-negative");
  if (!(x >= 0.0 && x < 1.0) || (n == 0 && x == 0.0)) {
    throw domain_error("fourier_partial_sum: x outside the validity range of the expansion");
  }
  CompensatedSum s;
  for (long k = 0; k <= terms; ++k) {
    const double odd = 2.0 * static_cast<double>(k) + 1.0;
    // (2k+1) x - n/2, reduced exactly where possible
    const double t = std::fma(odd, x, -0.5 * n);
    s.add(sin_pi(t) / std::pow(odd, n + 1));
  }
  double prefactor = 4.0 / std::numbers::pi;
  for (int i = 1; i <= n; ++i) prefactor *= static_cast<double>(i) / std::numbers::pi;
  return prefactor * s.value();
}

}  // namespace zetae
