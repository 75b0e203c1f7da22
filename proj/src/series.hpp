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

#ifndef ZETAE_SRC_SERIES_HPP
#define ZETAE_SRC_SERIES_HPP

#include "zetae/zeta_eval.hpp"

#include <complex>
#include <functional>

namespace zetae::detail {

struct TailSum {
  std::complex<double> value;
  double first_omitted = 0.0;  // |first term left out|, 0 if none
  double magnitude = 0.0;      // sum of |included terms|
  int last_index = 0;          // highest k included, k_start - 1 if none
};

// Sums term(k) for k = k_start.. under the policy. A series known to vanish
// past terminal_index (>= 0) is summed through that index whatever the
// policy. The scan also ends at the first non-finite term and once a nonzero
// term drops below 1e-22 * reference.
TailSum sum_tail(const std::function<std::complex<double>(int)>& term, int k_start,
                 const TruncationPolicy& policy, double q, double reference,
                 int terminal_index = -1);

// Relative rounding allowance applied to sums of |terms|.
inline constexpr double kRoundingFactor = 8.0 * 2.220446049250313e-16;

}  // namespace zetae::detail

#endif  // ZETAE_SRC_SERIES_HPP
