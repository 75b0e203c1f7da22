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

#include <cmath>

namespace zetae::kernels::detail {

namespace {

// Ogita-Rump-Oishi Dot2.
double dot2(const double* x, const double* y, std::size_t n) noexcept {
  double p = 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Pair h = two_prod(x[i], y[i]);
    const Pair t = two_sum(p, h.hi);
    p = t.hi;
    s += t.lo + h.lo;
  }
  return p + s;
}

}  // namespace

std::complex<double> weighted_sum_scalar(const double* w, const double* re, const double* im,
                                         std::size_t n) {
  return {dot2(w, re, n), dot2(w, im, n)};
}

void horner_scalar(const double* coeffs, std::size_t ncoeffs, const double* x, double* out,
                   std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (ncoeffs == 0) {
      out[j] = 0.0;
      continue;
    }
    double p = coeffs[ncoeffs - 1];
    for (std::size_t i = ncoeffs - 1; i-- > 0;) {
      p = std::fma(p, x[j], coeffs[i]);
    }
    out[j] = p;
  }
}

}  // namespace zetae::kernels::detail
