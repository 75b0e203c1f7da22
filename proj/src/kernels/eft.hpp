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

#ifndef ZETAE_SRC_KERNELS_EFT_HPP
#define ZETAE_SRC_KERNELS_EFT_HPP

#include <cmath>

namespace zetae::kernels::detail {

// Error-free transforms: a + b = s + e and a * b = p + e exactly.
struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline Pair two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace zetae::kernels::detail

#endif  // ZETAE_SRC_KERNELS_EFT_HPP
