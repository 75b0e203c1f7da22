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

#include "zetae/boole.hpp"
#include "zetae/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetae;
using cd = std::complex<double>;

TEST_CASE("Boole summation on constants and linear functions") {
  const BooleReport c = boole_sum(polynomial_function({1.0}), 0, 2, 1);
  CHECK(std::abs(c.lhs) == 0.0);
  CHECK(std::abs(c.rhs_main) <= 1e-15);
  CHECK(std::abs(c.remainder) <= 1e-15);

  const BooleReport t = boole_sum(polynomial_function({0.0, 1.0}), 0, 2, 1);
  CHECK(t.lhs.real() == -2.0);
  CHECK(t.rhs_main.real() == doctest::Approx(-2.0));
  CHECK(std::abs(t.remainder) <= 1e-15);
  CHECK(t.residual >= 0.0);
}

TEST_CASE("Boole summation closes for (t+q)^-z") {
  const BooleReport r = boole_sum(power_function(2.5, 10.0, 7), 0, 6, 6);
  CHECK(r.residual <= 1e-12);

  for (double q : {5.0, 10.0, 20.0}) {
    for (cd z : {cd(1.5, 0.0), cd(3.0, 0.0), cd(2.0, 1.0)}) {
      for (int n : {2, 4, 8}) {
        CHECK(boole_sum(power_function(z, q, n + 1), 0, 6, n).residual <= 1e-11);
      }
    }
  }
}

TEST_CASE("remainder matches lhs - rhs_main") {
  const SmoothFunction f = power_function(3.0, 10.0, 5);
  const BooleReport r = boole_sum(f, 0, 1, 4);
  const cd rem = boole_remainder(f, 4, 0, 1);
  CHECK(std::abs(rem - (r.lhs - r.rhs_main)) <= 1e-12);
  CHECK(std::abs(boole_remainder(f, 4, 0, 1, RemainderScale::lemma1) - 0.5 * rem) <= 1e-18);
}

TEST_CASE("remainder vanishes for polynomials of degree <= N") {
  const std::vector<double> p{0.5, -1.0, 2.0, 0.25};
  for (int n = 3; n <= 6; ++n) {
    CHECK(std::abs(boole_remainder(polynomial_function(p), n, -2, 5)) == 0.0);
    CHECK(boole_sum(polynomial_function(p), -2, 5, n).residual <= 1e-12);
  }
}

TEST_CASE("N = 0 remainder of f(t) = t on [0,1]") {
  CHECK(boole_remainder(polynomial_function({0.0, 1.0}), 0, 0, 1).real() ==
        doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("derivative orders beyond the declared maximum are rejected") {
  const SmoothFunction f = power_function(2.0, 10.0, 3);
  CHECK_THROWS_AS(f(0.0, 4), capability_error);
  CHECK_THROWS_AS(boole_sum(f, 0, 2, 3), capability_error);
  CHECK_THROWS_AS(boole_remainder(f, 3, 0, 1), capability_error);
  CHECK_THROWS_AS(lemma1_value(f, 3), capability_error);
  CHECK_THROWS_AS(boole_sum(f, 2, 2, 1), domain_error);
}

TEST_CASE("power function derivatives") {
  const cd z(2.0, 0.5);
  const SmoothFunction f = power_function(z, 10.0, 4);
  // f^(j)(t) = (-1)^j (z)_j (t+q)^{-z-j}
  const cd x = 11.0;
  CHECK(std::abs(f(1.0, 0) - std::pow(x, -z)) <= 1e-15);
  CHECK(std::abs(f(1.0, 2) - z * (z + 1.0) * std::pow(x, -z - 2.0)) <= 1e-16);
}

TEST_CASE("single-step expansion") {
  const EvalResult r = lemma1_value(power_function(2.0, 10.0, 9), 8);
  CHECK(r.value.real() == doctest::Approx(0.01).epsilon(1e-13));
  CHECK(r.method == Method::oracle);

  const EvalResult c = lemma1_value(polynomial_function({3.5}), 1);
  CHECK(c.value.real() == doctest::Approx(3.5));

  // Summing the single-step identity over the shifts n = 0,1,2,... with
  // alternating signs gives zeta_E; compare one shift with the oracle.
  const double q = 12.0;
  const cd z(1.5, 0.0);
  const cd lhs = lemma1_value(power_function(z, q, 9), 8).value;
  const cd zeta_q = oracles::zeta_e(z, q);
  const cd zeta_q1 = oracles::zeta_e(z, q + 1.0);
  CHECK(std::abs(lhs - (zeta_q + zeta_q1)) <= 1e-10 * std::abs(lhs));
}
