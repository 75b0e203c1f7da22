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

#ifndef ZETAE_EXPANSION_COEFFS_HPP
#define ZETAE_EXPANSION_COEFFS_HPP

#include "zetae/rational.hpp"

#include <algorithm>
#include <complex>
#include <vector>

namespace zetae {

// Rising factorial (z)_k = z (z+1) ... (z+k-1); (z)_0 = 1.
std::complex<double> pochhammer(std::complex<double> z, int k);
Rational pochhammer(const Rational& z, int k);

// d/dz [(z)_k / k!] = sum_{j=0}^{k-1} (z)_j / (j! (k-j)),  k >= 1.
std::complex<double> lemma2_coefficient(std::complex<double> z, int k);
Rational lemma2_coefficient(const Rational& z, int k);

// Nested-sum coefficients of q^{-z-k} in the m-th derivative expansion,
//
//   c_{k,m}(z) = E_k(0) g_m(k),
//   g_0(j) = (z)_j / j!,
//   g_m(i) = sum_{j=0}^{i-1} g_{m-1}(j) / (i - j),
//
// so c_{k,0} = E_k(0)(z)_k/k!, c_{k,1} = E_k(0) * lemma2_coefficient(z, k),
// and d/dz c_{k,m} = c_{k,m+1}. Layers g_m(0..K) are memoized and extended on
// demand; each new entry costs O(K). One cache serves exactly one z and must
// not be shared across threads.
class CoefficientCache {
 public:
  explicit CoefficientCache(std::complex<double> z) : z_(z) {}

  std::complex<double> z() const noexcept { return z_; }

  // g_m(k).
  std::complex<double> nested(int k, int m);

  // c_{k,m}(z); requires k >= 2 (domain_error otherwise). A nest that
  // cancels to within its own rounding level is returned as exactly 0.
  std::complex<double> coefficient(int k, int m);

 private:
  void extend(int k, int m);

  std::complex<double> z_;
  std::vector<std::vector<std::complex<double>>> layers_;
  // Same recursion on |g_0|: the magnitude scale of each nested sum.
  std::vector<std::vector<double>> scales_;
};

std::complex<double> c_coefficient(CoefficientCache& cache, int k, int m);

// Same nest in exact arithmetic at a rational point.
Rational c_coefficient_exact(const Rational& z, int k, int m);

// c_{k,m}(-n) with the innermost sum written as
//   sum_{j_m=0}^{min(n, j_{m-1}-1)} C(n, j_m) (-1)^{j_m} / (j_{m-1} - j_m),
// m >= 1. Equal to c_coefficient_exact(-n, k, m); the truncation drops only
// terms with (-n)_j = 0.
Rational c_coefficient_neg_int_exact(int k, int m, int n);
double c_coefficient_neg_int(int k, int m, int n);

// c_{k,m}(-n) for k = 0..k_max (entries below 2 are zero), computed exactly
// and rounded once.
std::vector<double> c_coefficients_neg_int(int m, int n, int k_max);

// sum_{j=0}^{n} C(n,j) (-1)^j / (k - j), k > n >= 0 (domain_error otherwise).
Rational alternating_binomial_sum(int n, int k);
// (-1)^n n! / (k (k-1) ... (k-n)).
Rational alternating_binomial_closed_form(int n, int k);

// sum_{k=2}^{k_max} a(k) sum_{j=0}^{min(n,k-1)} b(k,j)
template <class T, class A, class B>
T double_sum_truncated(A&& a, B&& b, int n, int k_max) {
  T total{};
  for (int k = 2; k <= k_max; ++k) {
    T inner{};
    for (int j = 0; j <= std::min(n, k - 1); ++j) inner += b(k, j);
    total += a(k) * inner;
  }
  return total;
}

// The same sum split at k = n:
//   sum_{k=2}^{n} a(k) sum_{j=0}^{k-1} b(k,j) + sum_{k=n+1}^{k_max} a(k) sum_{j=0}^{n} b(k,j)
template <class T, class A, class B>
T double_sum_split(A&& a, B&& b, int n, int k_max) {
  T head{};
  for (int k = 2; k <= std::min(n, k_max); ++k) {
    T inner{};
    for (int j = 0; j <= k - 1; ++j) inner += b(k, j);
    head += a(k) * inner;
  }
  T tail{};
  for (int k = std::max(n + 1, 2); k <= k_max; ++k) {
    T inner{};
    for (int j = 0; j <= n; ++j) inner += b(k, j);
    tail += a(k) * inner;
  }
  return head + tail;
}

}  // namespace zetae

#endif  // ZETAE_EXPANSION_COEFFS_HPP
