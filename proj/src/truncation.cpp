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

#include "series.hpp"
#include "zetae/compensated_sum.hpp"
#include "zetae/errors.hpp"
#include "zetae/special_numbers.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace zetae {

TruncationPolicy TruncationPolicy::optimal(int cap) {
  TruncationPolicy p;
  p.mode = Mode::optimal;
  p.cap = cap;
  return p;
}

TruncationPolicy TruncationPolicy::fixed(int index, int cap) {
  if (index < 0) throw domain_error("fixed truncation index must be non-negative");
  TruncationPolicy p;
  p.mode = Mode::fixed;
  p.fixed_index = index;
  p.cap = cap;
  return p;
}

int max_terms_from_env(int fallback) {
  const char* env = std::getenv("ZETAE_MAX_TERMS");
  if (env == nullptr) return fallback;
  int value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value < 2) return fallback;
  return value;
}

int TruncationPolicy::effective_cap(double q) const {
  int c = cap > 0 ? cap : 2 * static_cast<int>(std::ceil(std::numbers::pi * q)) + 10;
  if (mode == Mode::fixed) c = std::max(c, fixed_index + 1);
  c = std::min(c, EulerNumberTable::instance().max_index());
  c = std::min(c, max_terms_from_env(c));
  return std::max(c, 2);
}

std::string TruncationPolicy::to_string() const {
  if (mode == Mode::optimal) return "optimal";
  return "fixed:" + std::to_string(fixed_index);
}

TruncationPolicy TruncationPolicy::parse(const std::string& text) {
  if (text == "optimal") return optimal();
  constexpr std::string_view prefix = "fixed:";
  if (text.rfind(prefix, 0) == 0) {
    const char* begin = text.data() + prefix.size();
    const char* end = text.data() + text.size();
    int n = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, n);
    if (ec == std::errc() && ptr == end && begin != end && n >= 0) return fixed(n);
  }
  throw domain_error("policy must be 'optimal' or 'fixed:N', got '" + text + "'");
}

std::size_t optimal_truncation_index(std::span<const std::complex<double>> terms) {
  std::size_t best = terms.size();
  double best_mag = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double mag = std::abs(terms[i]);
    if (mag == 0.0) continue;
    if (best == terms.size() || mag < best_mag) {
      best = i;
      best_mag = mag;
    }
  }
  return best;
}

namespace detail {

TailSum sum_tail(const std::function<std::complex<double>(int)>& term, int k_start,
                 const TruncationPolicy& policy, double q, double reference, int terminal_index) {
  const bool terminating = terminal_index >= 0;
  const int cap = terminating ? std::min(terminal_index, kDefaultMaxEulerIndex)
                              : policy.effective_cap(q);
  std::vector<std::complex<double>> terms;
  terms.reserve(std::max(cap - k_start + 1, 0));
  for (int k = k_start; k <= cap; ++k) {
    const std::complex<double> t = term(k);
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) break;
    terms.push_back(t);
    const double mag = std::abs(t);
    if (!terminating && policy.mode == TruncationPolicy::Mode::optimal && mag != 0.0 &&
        mag < 1e-22 * reference) {
      break;
    }
  }

  std::size_t stop = terms.size();
  if (!terminating) {
    if (policy.mode == TruncationPolicy::Mode::optimal) {
      stop = optimal_truncation_index(terms);
    } else {
      stop = std::min<std::size_t>(terms.size(),
                                   std::max(policy.fixed_index - k_start + 1, 0));
    }
  }

  TailSum out;
  ComplexCompensatedSum sum;
  for (std::size_t i = 0; i < stop; ++i) sum.add(terms[i]);
  out.value = sum.value();
  out.magnitude = sum.magnitude();
  out.last_index = k_start + static_cast<int>(stop) - 1;
  for (std::size_t i = stop; i < terms.size(); ++i) {
    if (terms[i] != 0.0) {
      out.first_omitted = std::abs(terms[i]);
      break;
    }
  }
  return out;
}

}  // namespace detail
}  // namespace zetae
