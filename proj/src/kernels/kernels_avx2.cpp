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

#include "eft.hpp"
#include "zetae/kernels/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#define ZETAE_AVX2 __attribute__((target("avx2,fma")))

namespace zetae::kernels::detail {

namespace {

struct Dot2Lanes {
  __m256d p;
  __m256d s;
};

ZETAE_AVX2 inline void dot2_step(Dot2Lanes& acc, __m256d x, __m256d y) {
  const __m256d h = _mm256_mul_pd(x, y);
  const __m256d hl = _mm256_fmsub_pd(x, y, h);
  const __m256d t = _mm256_add_pd(acc.p, h);
  const __m256d bb = _mm256_sub_pd(t, acc.p);
  const __m256d e = _mm256_add_pd(_mm256_sub_pd(acc.p, _mm256_sub_pd(t, bb)), _mm256_sub_pd(h, bb));
  acc.p = t;
  acc.s = _mm256_add_pd(acc.s, _mm256_add_pd(e, hl));
}

// Folds the four lanes and the scalar tail into one value, keeping the
// low-order parts through two_sum.
ZETAE_AVX2 double finish(const Dot2Lanes& acc, const double* x, const double* y, std::size_t from,
                         std::size_t n) {
  alignas(32) double p[4];
  alignas(32) double s[4];
  _mm256_store_pd(p, acc.p);
  _mm256_store_pd(s, acc.s);
  double hi = 0.0;
  double lo = 0.0;
  for (int l = 0; l < 4; ++l) {
    const Pair t = two_sum(hi, p[l]);
    hi = t.hi;
    lo += t.lo + s[l];
  }
  for (std::size_t i = from; i < n; ++i) {
    const Pair h = two_prod(x[i], y[i]);
    const Pair t = two_sum(hi, h.hi);
    hi = t.hi;
    lo += t.lo + h.lo;
  }
  return hi + lo;
}

}  // namespace

ZETAE_AVX2 std::complex<double> weighted_sum_avx2(const double* w, const double* re,
                                                  const double* im, std::size_t n) {
  Dot2Lanes acc_re{_mm256_setzero_pd(), _mm256_setzero_pd()};
  Dot2Lanes acc_im{_mm256_setzero_pd(), _mm256_setzero_pd()};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    dot2_step(acc_re, wv, _mm256_loadu_pd(re + i));
    dot2_step(acc_im, wv, _mm256_loadu_pd(im + i));
  }
  return {finish(acc_re, w, re, i, n), finish(acc_im, w, im, i, n)};
}

ZETAE_AVX2 void horner_avx2(const double* coeffs, std::size_t ncoeffs, const double* x,
                            double* out, std::size_t n) {
  if (ncoeffs == 0) {
    for (std::size_t j = 0; j < n; ++j) out[j] = 0.0;
    return;
  }
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d xv = _mm256_loadu_pd(x + j);
    __m256d p = _mm256_set1_pd(coeffs[ncoeffs - 1]);
    for (std::size_t i = ncoeffs - 1; i-- > 0;) {
      p = _mm256_fmadd_pd(p, xv, _mm256_set1_pd(coeffs[i]));
    }
    _mm256_storeu_pd(out + j, p);
  }
  if (j < n) horner_scalar(coeffs, ncoeffs, x + j, out + j, n - j);
}

}  // namespace zetae::kernels::detail

#endif
