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

#include "zetae/errors.hpp"
#include "zetae/kernels/kernels.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

using namespace zetae;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  CHECK(kernels::supported(kernels::Isa::scalar));
  CHECK(kernels::table_for(kernels::Isa::scalar).isa == kernels::Isa::scalar);
  CHECK(kernels::name(kernels::Isa::avx2) == "avx2");
  if (!kernels::supported(kernels::Isa::avx2)) {
    CHECK_THROWS_AS(kernels::table_for(kernels::Isa::avx2), capability_error);
  }
}

TEST_CASE("weighted sum: scalar is compensated") {
  // Cancelling terms that a plain loop loses entirely.
  std::vector<double> w{1.0, 1.0, 1.0, 1.0};
  std::vector<double> re{1e16, 1.0, -1e16, 1.0};
  std::vector<double> im{0.0, 0.0, 0.0, 0.0};
  CHECK(kernels::detail::weighted_sum_scalar(w.data(), re.data(), im.data(), 4).real() == 2.0);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!kernels::supported(kernels::Isa::avx2)) {
    MESSAGE("AVX2 not available; equivalence not exercised");
    return;
  }
  const auto& s = kernels::table_for(kernels::Isa::scalar);
  const auto& v = kernels::table_for(kernels::Isa::avx2);
  std::mt19937_64 rng(20240611);

  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 31u, 64u, 129u, 1000u}) {
    CAPTURE(n);
    const auto w = random_vector(rng, n, -2.0, 2.0);
    const auto re = random_vector(rng, n, -1e3, 1e3);
    const auto im = random_vector(rng, n, -1.0, 1.0);
    const auto a = s.weighted_sum(w.data(), re.data(), im.data(), n);
    const auto b = v.weighted_sum(w.data(), re.data(), im.data(), n);
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(w[i] * re[i]) + std::abs(w[i] * im[i]);
    const double ulp = std::numeric_limits<double>::epsilon();
    CHECK(std::abs(a.real() - b.real()) <= 4 * ulp * std::abs(a.real()) + 1e-30 * mag);
    CHECK(std::abs(a.imag() - b.imag()) <= 4 * ulp * std::abs(a.imag()) + 1e-30 * mag);

    for (std::size_t nc : {1u, 2u, 5u, 17u}) {
      const auto c = random_vector(rng, nc, -1.0, 1.0);
      std::vector<double> oa(n), ob(n);
      s.horner(c.data(), nc, re.data(), oa.data(), n);
      v.horner(c.data(), nc, re.data(), ob.data(), n);
      CHECK(std::memcmp(oa.data(), ob.data(), n * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("span wrappers use the active table") {
  std::vector<double> c{1.0, -2.0, 1.0};  // (x-1)^2
  std::vector<double> x{0.0, 1.0, 3.0};
  std::vector<double> out(3);
  kernels::horner(c, x, out);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == 0.0);
  CHECK(out[2] == 4.0);

  std::vector<double> w{0.5, 0.25};
  std::vector<double> re{2.0, 4.0};
  std::vector<double> im{-2.0, 8.0};
  const auto r = kernels::weighted_sum(w, re, im);
  CHECK(r.real() == 2.0);
  CHECK(r.imag() == 1.0);
}
