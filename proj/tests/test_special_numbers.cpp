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

#include "oracles.hpp"

#include "zetae/errors.hpp"
#include "zetae/special_numbers.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetae;

TEST_CASE("Euler numbers at zero match the generating-function series") {
  const auto ref = oracles::euler_numbers_by_series(32);
  for (int k = 0; k <= 32; ++k) {
    CAPTURE(k);
    CHECK(euler_number_at_zero(k) == ref[k]);
  }
}

TEST_CASE("Euler number table values") {
  CHECK(euler_number_at_zero(0) == 1);
  CHECK(euler_number_at_zero(1) == Rational(-1, 2));
  CHECK(euler_number_at_zero(3) == Rational(1, 4));
  CHECK(euler_number_at_zero(5) == Rational(-1, 2));
  CHECK(euler_number_at_zero(7) == Rational(17, 8));
  for (int k = 2; k <= kDefaultMaxEulerIndex; k += 2) CHECK(euler_number_at_zero(k) == 0);
  CHECK_THROWS_AS(euler_number_at_zero(kDefaultMaxEulerIndex + 1), capacity_error);

  const auto& t = EulerNumberTable::instance();
  CHECK(t.max_index() == kDefaultMaxEulerIndex);
  CHECK(t.approx(3) == 0.25);
  CHECK(&EulerNumberTable::instance() == &t);
}

TEST_CASE("Euler polynomial coefficients") {
  const auto& p3 = euler_polynomial_of(3);
  REQUIRE(p3.degree() == 3);
  CHECK(p3.coefficients()[0] == Rational(1, 4));
  CHECK(p3.coefficients()[1] == 0);
  CHECK(p3.coefficients()[2] == Rational(-3, 2));
  CHECK(p3.coefficients()[3] == 1);

  const auto& p2 = euler_polynomial_of(2);
  CHECK(p2.coefficients()[0] == 0);
  CHECK(p2.coefficients()[1] == -1);
  CHECK(p2.coefficients()[2] == 1);

  CHECK(euler_polynomial(0, 123.5) == 1.0);
  CHECK(euler_polynomial(3, 0.0) == 0.25);
  for (int n = 0; n <= 40; ++n) {
    CHECK(euler_polynomial_of(n).coefficients()[n] == 1);
    CHECK(euler_polynomial_of(n)(Rational(0)) == euler_number_at_zero(n));
  }
}

TEST_CASE("Euler polynomial matches the generating-function oracle") {
  for (int n : {1, 4, 7, 12}) {
    for (double q : {-1.5, 0.25, 2.0, 7.5}) {
      const double ref = oracles::to_d(oracles::euler_poly(n, oracles::Q(q)));
      CHECK(euler_polynomial(n, q) == doctest::Approx(ref).epsilon(1e-13));
    }
  }
}

TEST_CASE("E_n(q+1) + E_n(q) = 2 q^n") {
  for (int n = 0; n <= 32; ++n) {
    const auto& p = euler_polynomial_of(n);
    for (double qd : {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
      CAPTURE(n);
      CAPTURE(qd);
      const Rational q(qd);
      Rational qn = 1;
      for (int i = 0; i < n; ++i) qn *= q;
      CHECK(p(q + 1) + p(q) == 2 * qn);

      const double lhs = p(qd + 1.0) + p(qd);
      const double rhs = 2.0 * std::pow(qd, n);
      const double scale = p.condition_scale(qd + 1.0) + p.condition_scale(qd);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("evaluate over many points agrees with scalar evaluation") {
  const auto& p = euler_polynomial_of(9);
  std::vector<double> x{-1.0, 0.0, 0.3, 0.5, 1.0, 2.0, 3.5, 10.0, 11.0};
  std::vector<double> out(x.size());
  p.evaluate(x, out);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(out[i] == p(x[i]));
}

TEST_CASE("quasi-periodic Euler function") {
  CHECK(quasi_periodic_euler(0, 0.25) == 1.0);
  CHECK(quasi_periodic_euler(1, 1.25) == doctest::Approx(0.25));
  CHECK(quasi_periodic_euler(2, -0.5) == doctest::Approx(0.25));
  for (int n = 0; n <= 6; ++n) {
    // Dyadic points, so that x + 1 is formed without rounding.
    for (double x : {-3.75, -1.0, -0.25, 0.0, 0.125, 0.5, 0.875, 2.375, 5.0}) {
      CHECK(quasi_periodic_euler(n, x + 1.0) == -quasi_periodic_euler(n, x));
    }
  }
}

TEST_CASE("Fourier partial sums") {
  CHECK(fourier_partial_sum(0, 0.5, 200000) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(fourier_partial_sum(1, 0.3, 10000) == doctest::Approx(-0.2).epsilon(1e-3));
  CHECK(std::abs(fourier_partial_sum(2, 0.0, 10000)) <= 1e-6);

  CHECK_THROWS_AS(fourier_partial_sum(0, 0.0, 10), domain_error);
  CHECK_THROWS_AS(fourier_partial_sum(1, 1.0, 10), domain_error);
  CHECK_THROWS_AS(fourier_partial_sum(1, -0.1, 10), domain_error);
  CHECK_NOTHROW(fourier_partial_sum(1, 0.0, 10));

  for (int n = 1; n <= 4; ++n) {
    for (double x : {0.15, 0.4, 0.77}) {
      double prev = INFINITY;
      for (long k : {100L, 1000L, 10000L}) {
        const double err = std::abs(fourier_partial_sum(n, x, k) - quasi_periodic_euler(n, x));
        // Once the sum has converged to rounding level it cannot improve.
        CHECK((err < prev || err <= 4e-16));
        prev = err;
      }
    }
  }
}
