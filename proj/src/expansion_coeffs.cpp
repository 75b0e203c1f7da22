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

#include "zetae/expansion_coeffs.hpp"

#include "zetae/errors.hpp"
#include "zetae/special_numbers.hpp"

#include <limits>
#include <string>

namespace zetae {

std::complex<double> pochhammer(std::complex<double> z, int k) {
  if (k < 0) throw domain_error("pochhammer: k must be non-negative");
  std::complex<double> p = 1.0;
  for (int i = 0; i < k; ++i) p *= z + static_cast<double>(i);
  return p;
}

Rational pochhammer(const Rational& z, int k) {
  if (k < 0) throw domain_error("pochhammer: k must be non-negative");
  Rational p = 1;
  for (int i = 0; i < k; ++i) p *= z + i;
  return p;
}

namespace {

// g_0(0..len-1) = (z)_j / j!
template <class T>
std::vector<T> base_layer(const T& z, int len) {
  std::vector<T> g(len);
  if (len == 0) return g;
  g[0] = T(1);
  for (int j = 1; j < len; ++j) g[j] = g[j - 1] * (z + T(j - 1)) / T(j);
  return g;
}

template <class T>
std::vector<T> next_layer(const std::vector<T>& prev) {
  std::vector<T> g(prev.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    T s{};
    for (std::size_t j = 0; j < i; ++j) s += prev[j] / T(static_cast<int>(i - j));
    g[i] = s;
  }
  return g;
}

void check_k(int k) {
  if (k < 2) throw domain_error("c_{k,m} requires k >= 2, got k = " + std::to_string(k));
}

void check_m(int m) {
  if (m < 0) throw domain_error("derivative order m must be non-negative");
}

}  // namespace

std::complex<double> lemma2_coefficient(std::complex<double> z, int k) {
  if (k < 1) throw domain_error("lemma2_coefficient: k must be positive");
  std::complex<double> s = 0.0;
  std::complex<double> term = 1.0;  // (z)_j / j!
  for (int j = 0; j < k; ++j) {
    s += term / static_cast<double>(k - j);
    term *= (z + static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return s;
}

Rational lemma2_coefficient(const Rational& z, int k) {
  if (k < 1) throw domain_error("lemma2_coefficient: k must be positive");
  Rational s = 0;
  Rational term = 1;
  for (int j = 0; j < k; ++j) {
    s += term / (k - j);
    term *= (z + j) / (j + 1);
  }
  return s;
}

namespace {

std::vector<double> abs_layer(const std::vector<std::complex<double>>& g) {
  std::vector<double> a(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) a[i] = std::abs(g[i]);
  return a;
}

}  // namespace

void CoefficientCache::extend(int k, int m) {
  const std::size_t len = static_cast<std::size_t>(k) + 1;
  if (layers_.empty() || layers_[0].size() < len) {
    // Regrow every existing layer; cheap relative to the nested sums.
    const std::size_t target = std::max(len, layers_.empty() ? 0 : layers_[0].size() * 2);
    layers_.clear();
    scales_.clear();
    layers_.push_back(base_layer(z_, static_cast<int>(target)));
    scales_.push_back(abs_layer(layers_.back()));
  }
  const std::size_t depth = std::max<std::size_t>(layers_.size(), m + 1);
  while (layers_.size() < depth) {
    layers_.push_back(next_layer(layers_.back()));
    scales_.push_back(next_layer(scales_.back()));
  }
}

std::complex<double> CoefficientCache::nested(int k, int m) {
  check_m(m);
  if (k < 0) throw domain_error("nested sum index must be non-negative");
  extend(k, m);
  return layers_[m][k];
}

std::complex<double> CoefficientCache::coefficient(int k, int m) {
  check_k(k);
  const double ek = EulerNumberTable::instance().approx(k);
  if (ek == 0.0) return 0.0;
  const std::complex<double> g = nested(k, m);
  // Cancellation down to the rounding level of the nest: the coefficient is
  // zero at working precision.
  const double noise =
      4.0 * (k + m + 1) * std::numeric_limits<double>::epsilon() * scales_[m][k];
  if (std::abs(g) <= noise) return 0.0;
  return ek * g;
}

std::complex<double> c_coefficient(CoefficientCache& cache, int k, int m) {
  return cache.coefficient(k, m);
}

Rational c_coefficient_exact(const Rational& z, int k, int m) {
  check_k(k);
  check_m(m);
  const Rational& ek = EulerNumberTable::instance().exact(k);
  if (ek == 0) return 0;
  std::vector<Rational> g = base_layer(z, k + 1);
  for (int i = 0; i < m; ++i) g = next_layer(g);
  return ek * g[k];
}

namespace {

// h_m(0..k) for z = -n with the min(n, .) truncation in the innermost sum.
std::vector<Rational> neg_int_layers(int m, int n, int k_max) {
  if (m < 1) throw domain_error("negative-integer coefficients require m >= 1");
  if (n < 0) throw domain_error("n must be non-negative");
  const int len = k_max + 1;
  std::vector<Rational> binom_signed(n + 1);
  for (int j = 0; j <= n; ++j) {
    binom_signed[j] = Rational(binomial(n, j)) * (j % 2 == 0 ? 1 : -1);
  }
  std::vector<Rational> h(len);
  for (int i = 0; i < len; ++i) {
    Rational s = 0;
    for (int j = 0; j <= std::min(n, i - 1); ++j) s += binom_signed[j] / (i - j);
    h[i] = s;
  }
  for (int layer = 1; layer < m; ++layer) h = next_layer(h);
  return h;
}

}  // namespace

Rational c_coefficient_neg_int_exact(int k, int m, int n) {
  check_k(k);
  const Rational& ek = EulerNumberTable::instance().exact(k);
  if (ek == 0) return 0;
  return ek * neg_int_layers(m, n, k)[k];
}

double c_coefficient_neg_int(int k, int m, int n) {
  return to_double(c_coefficient_neg_int_exact(k, m, n));
}

std::vector<double> c_coefficients_neg_int(int m, int n, int k_max) {
  const auto& table = EulerNumberTable::instance();
  k_max = std::min(k_max, table.max_index());
  std::vector<double> out(std::max(k_max + 1, 0), 0.0);
  if (k_max < 2) return out;
  const std::vector<Rational> h = neg_int_layers(m, n, k_max);
  for (int k = 2; k <= k_max; ++k) {
    const Rational& ek = table.exact(k);
    if (ek != 0) out[k] = to_double(ek * h[k]);
  }
  return out;
}

Rational alternating_binomial_sum(int n, int k) {
  if (n < 0 || k <= n) throw domain_error("alternating_binomial_sum requires k > n >= 0");
  Rational s = 0;
  for (int j = 0; j <= n; ++j) {
    s += Rational(binomial(n, j)) * (j % 2 == 0 ? 1 : -1) / (k - j);
  }
  return s;
}

Rational alternating_binomial_closed_form(int n, int k) {
  if (n < 0 || k <= n) throw domain_error("alternating_binomial_closed_form requires k > n >= 0");
  BigInt den = 1;
  for (int i = 0; i <= n; ++i) den *= k - i;
  Rational r(factorial(n), den);
  return n % 2 == 0 ? r : Rational(-r);
}

}  // namespace zetae
