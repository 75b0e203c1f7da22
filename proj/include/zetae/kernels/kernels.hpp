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

#ifndef ZETAE_KERNELS_KERNELS_HPP
#define ZETAE_KERNELS_KERNELS_HPP

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant. The variant is picked
// once at first use from the CPU feature bits; ZETAE_KERNEL=scalar|avx2
// overrides the choice.
//
// weighted_sum is accumulated in doubled working precision (TwoProduct and
// TwoSum error-free transforms), so the two variants differ by at most a few
// units in the last place of the result even though their summation orders
// differ. horner uses a fused multiply-add per step in both variants and is
// bit-identical across them.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace zetae::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // sum_i w[i] * (re[i] + 1i*im[i])
  std::complex<double> (*weighted_sum)(const double* w, const double* re, const double* im,
                                       std::size_t n);
  // out[j] = sum_i coeffs[i] * x[j]^i, coefficients in ascending powers.
  void (*horner)(const double* coeffs, std::size_t ncoeffs, const double* x, double* out,
                 std::size_t n);
};

bool supported(Isa isa) noexcept;
std::string_view name(Isa isa) noexcept;

// Throws capability_error if the ISA is not available on this CPU/build.
const KernelTable& table_for(Isa isa);

// Runtime-selected table.
const KernelTable& active();

std::complex<double> weighted_sum(std::span<const double> weights, std::span<const double> re,
                                  std::span<const double> im);

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out);

namespace detail {
std::complex<double> weighted_sum_scalar(const double* w, const double* re, const double* im,
                                         std::size_t n);
void horner_scalar(const double* coeffs, std::size_t ncoeffs, const double* x, double* out,
                   std::size_t n);
#if defined(__x86_64__) || defined(_M_X64)
std::complex<double> weighted_sum_avx2(const double* w, const double* re, const double* im,
                                       std::size_t n);
void horner_avx2(const double* coeffs, std::size_t ncoeffs, const double* x, double* out,
                 std::size_t n);
#endif
}  // namespace detail

}  // namespace zetae::kernels

#endif  // ZETAE_KERNELS_KERNELS_HPP
