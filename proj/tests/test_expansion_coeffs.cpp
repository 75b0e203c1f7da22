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
#include "zetae/expansion_coeffs.hpp"
#include "zetae/special_numbers.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetae;
using cd = std::complex<double>;

namespace {

const std::vector<cd> kPoints{{0.0, 0.0}, {1.0, 0.0}, {2.5, 0.0}, {-0.5, 0.0}, {1.0, 2.0}};

}  // namespace

TEST_CASE("Pochhammer symbol") {
  CHECK(pochhammer(cd(3.7, -1.0), 0) == cd(1.0));
  CHECK(pochhammer(cd(-2.0), 3) == cd(0.0));
  CHECK(pochhammer(cd(-3.0), 2) == cd(6.0));
  CHECK(pochhammer(Rational(-3), 2) == 6);
  for (int n = 0; n <= 6; ++n) {
    for (int j = 0; j <= n; ++j) {
      const Rational expected = (j % 2 ? -1 : 1) * factorial(n) / factorial(n - j);
      CHECK(pochhammer(Rational(-n), j) == expected);
    }
  }
}

TEST_CASE("derivative of the rising factorial") {
  for (int k = 1; k <= 10; ++k) CHECK(lemma2_coefficient(Rational(0), k) == Rational(1, k));
  CHECK(lemma2_coefficient(Rational(1), 2) == Rational(3, 2));
  CHECK(lemma2_coefficient(cd(1.0), 2) == cd(1.5));

  const double h = 1e-6;
  const cd fd = (pochhammer(cd(2.5 + h), 5) - pochhammer(cd(2.5 - h), 5)) / (2 * h * 120.0);
  CHECK(std::abs(fd - lemma2_coefficient(cd(2.5), 5)) <= 1e-6);

  for (cd z : kPoints) {
    for (int k = 1; k <= 12; ++k) {
      const double kf = to_double(factorial(k));
      const cd d = (pochhammer(z + h, k) - pochhammer(z - h, k)) / (2 * h * kf);
      CHECK(std::abs(d - lemma2_coefficient(z, k)) <= 1e-6);
    }
  }
}

TEST_CASE("c_{k,m} examples") {
  for (int m = 0; m <= 4; ++m) {
    CoefficientCache cache(cd(1.3, 0.2));
    CHECK(c_coefficient(cache, 2, m) == cd(0.0));
  }
  CoefficientCache at0(0.0);
  CHECK(c_coefficient(at0, 3, 2).real() == doctest::Approx(0.25));
  CHECK(c_coefficient_exact(Rational(0), 3, 2) == Rational(1, 4));
  CHECK(c_coefficient_exact(Rational(2), 3, 0) == 1);
  CHECK(c_coefficient_exact(Rational(-1), 4, 0) == 0);
  CHECK(c_coefficient_neg_int_exact(3, 2, 0) == Rational(1, 4));
  CHECK(c_coefficient_neg_int_exact(3, 2, 1) == 0);
  for (int k = 2; k <= 20; k += 2) CHECK(c_coefficient_neg_int(k, 2, 3) == 0.0);

  CoefficientCache cache(cd(1.0, 1.0));
  CHECK_THROWS_AS(cache.coefficient(1, 0), domain_error);
}

TEST_CASE("c_{k,m} agrees with a brute-force nested sum") {
  for (const oracles::Q& z : {oracles::Q(0), oracles::Q(1, 2), oracles::Q(-3), oracles::Q(7, 3)}) {
    CoefficientCache cache(oracles::to_d(z));
    for (int m = 0; m <= 3; ++m) {
      for (int k = 2; k <= 11; ++k) {
        CAPTURE(k);
        CAPTURE(m);
        const oracles::Q ref = euler_number_at_zero(k) * oracles::nested_brute(z, k, m);
        CHECK(c_coefficient_exact(z, k, m) == ref);
        const double d = oracles::to_d(ref);
        CHECK(std::abs(cache.coefficient(k, m).real() - d) <= 1e-13 * std::max(1.0, std::abs(d)));
      }
    }
  }
  CHECK(c_coefficient_exact(Rational(0), 3, 1) == euler_number_at_zero(3) * lemma2_coefficient(Rational(0), 3));
}

TEST_CASE("c_{k,1} is the first-derivative inner coefficient") {
  for (cd z : kPoints) {
    CoefficientCache cache(z);
    for (int k = 2; k <= 30; ++k) {
      const cd expected = EulerNumberTable::instance().approx(k) * lemma2_coefficient(z, k);
      CHECK(std::abs(cache.coefficient(k, 1) - expected) <= 1e-13 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("derivative ladder dz c_{k,m} = c_{k,m+1}") {
  const double h = 1e-6;
  for (cd z : kPoints) {
    CoefficientCache at(z), up(z + h), down(z - h);
    for (int m = 0; m <= 3; ++m) {
      for (int k = 2; k <= 12; ++k) {
        const cd fd = (up.coefficient(k, m) - down.coefficient(k, m)) / (2 * h);
        const cd next = at.coefficient(k, m + 1);
        CHECK(std::abs(fd - next) <= 1e-6 * std::max(1.0, std::abs(next)));
      }
    }
  }
}

TEST_CASE("truncated negative-integer coefficients equal the full nest") {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 1; m <= 3; ++m) {
      for (int k = 2; k <= 12; ++k) {
        CHECK(c_coefficient_neg_int_exact(k, m, n) == c_coefficient_exact(Rational(-n), k, m));
      }
    }
  }
  const auto v = c_coefficients_neg_int(2, 3, 15);
  REQUIRE(v.size() == 16);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 0.0);
  for (int k = 2; k <= 15; ++k) CHECK(v[k] == to_double(c_coefficient_neg_int_exact(k, 2, 3)));
}

TEST_CASE("a nest that cancels exactly is returned as zero") {
  // c_{7,2}(-3) vanishes in exact arithmetic.
  REQUIRE(c_coefficient_neg_int_exact(7, 2, 3) == 0);
  CoefficientCache cache(-3.0);
  CHECK(cache.coefficient(7, 2) == cd(0.0));
}

TEST_CASE("alternating binomial sum") {
  CHECK(alternating_binomial_sum(0, 5) == Rational(1, 5));
  CHECK(alternating_binomial_sum(1, 2) == Rational(-1, 2));
  CHECK(alternating_binomial_sum(2, 3) == Rational(1, 3));
  for (int n = 0; n <= 8; ++n) {
    for (int k = n + 1; k <= 24; ++k) {
      CHECK(alternating_binomial_sum(n, k) == alternating_binomial_closed_form(n, k));
    }
  }
  CHECK_THROWS_AS(alternating_binomial_sum(3, 3), domain_error);
  CHECK_THROWS_AS(alternating_binomial_closed_form(3, 2), domain_error);
}

TEST_CASE("double sum split") {
  auto a = [](int k) { return Rational(k * k - 3, k + 1); };
  auto b = [](int k, int j) { return Rational(j + 1, k + 2 * j + 1); };
  for (int n = 0; n <= 7; ++n) {
    for (int k_max : {2, 5, 9, 14}) {
      CHECK(double_sum_truncated<Rational>(a, b, n, k_max) == double_sum_split<Rational>(a, b, n, k_max));
    }
  }
}
