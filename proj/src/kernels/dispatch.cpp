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

#include <cstdlib>
#include <string>

namespace zetae::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, detail::weighted_sum_scalar, detail::horner_scalar};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::avx2, detail::weighted_sum_avx2, detail::horner_avx2};
#endif

const KernelTable& select() {
  if (const char* env = std::getenv("ZETAE_KERNEL")) {
    const std::string want(env);
    if (want == "scalar") return kScalar;
    if (want == "avx2" && supported(Isa::avx2)) return table_for(Isa::avx2);
  }
  if (supported(Isa::avx2)) return table_for(Isa::avx2);
  return kScalar;
}

}  // namespace

bool supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::string_view name(Isa isa) noexcept {
  return isa == Isa::avx2 ? "avx2" : "scalar";
}

const KernelTable& table_for(Isa isa) {
  if (!supported(isa)) {
    throw capability_error("kernel ISA not available: " + std::string(name(isa)));
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

std::complex<double> weighted_sum(std::span<const double> weights, std::span<const double> re,
                                  std::span<const double> im) {
  if (re.size() != weights.size() || im.size() != weights.size()) {
    throw domain_error("weighted_sum: length mismatch");
  }
  return active().weighted_sum(weights.data(), re.data(), im.data(), weights.size());
}

void horner(std::span<const double> coeffs, std::span<const double> x, std::span<double> out) {
  if (out.size() != x.size()) throw domain_error("horner: length mismatch");
  active().horner(coeffs.data(), coeffs.size(), x.data(), out.data(), x.size());
}

}  // namespace zetae::kernels
