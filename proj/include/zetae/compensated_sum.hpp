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

#ifndef ZETAE_COMPENSATED_SUM_HPP
#define ZETAE_COMPENSATED_SUM_HPP

#include <cmath>
#include <complex>

namespace zetae {

// Neumaier's variant of Kahan summation. Terms are added in call order, so
// the result is reproducible for a fixed sequence.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    magnitude_ += std::fabs(x);
  }

  double value() const noexcept { return sum_ + carry_; }
  // Sum of |terms|; used for rounding-error estimates.
  double magnitude() const noexcept { return magnitude_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
  double magnitude_ = 0.0;
};

class ComplexCompensatedSum {
 public:
  void add(std::complex<double> x) noexcept {
    re_.add(x.real());
    im_.add(x.imag());
  }

  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }
  double magnitude() const noexcept { return std::hypot(re_.magnitude(), im_.magnitude()); }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace zetae

#endif  // ZETAE_COMPENSATED_SUM_HPP
