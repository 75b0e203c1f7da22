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

#ifndef ZETAE_ZETA_EVAL_HPP
#define ZETAE_ZETA_EVAL_HPP

// Evaluators for the alternating Hurwitz zeta function
//
//   zeta_E(z, q) = sum_{n>=0} (-1)^n (n + q)^{-z}
//
// and its z-derivatives zeta_E^{(m)}(z, q), for complex z and real q > 0.
//
// The large-q expansions used here are divergent; they are summed up to the
// smallest term (or a fixed index) and the first omitted term is reported as
// the error estimate. For smaller q the functional equation
// zeta_E(z, q+1) + zeta_E(z, q) = q^{-z} moves the evaluation point up first.

#include "zetae/eval_result.hpp"
#include "zetae/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zetae {

inline constexpr int kMaxDerivativeOrder = 8;
inline constexpr double kDefaultTargetAccuracy = 1e-12;
inline constexpr double kRegimeMinQ = 10.0;

struct TruncationPolicy {
  enum class Mode { fixed, optimal };

  Mode mode = Mode::optimal;
  // Highest k included when mode == fixed.
  int fixed_index = 0;
  // Largest k ever examined; 0 selects 2*ceil(pi*q) + 10.
  int cap = 0;

  static TruncationPolicy optimal(int cap = 0);
  static TruncationPolicy fixed(int index, int cap = 0);

  // Cap after applying the default rule, the Euler table size and
  // ZETAE_MAX_TERMS. Always >= 2.
  int effective_cap(double q) const;

  // "optimal" or "fixed:N".
  std::string to_string() const;
  // Inverse of to_string(); throws domain_error on malformed input.
  static TruncationPolicy parse(const std::string& text);

  friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

struct EvalRequest {
  std::complex<double> z;
  double q = 1.0;
  int m = 0;
  // Relative: the result is accepted when error_estimate <= target * |value|.
  double target_accuracy = kDefaultTargetAccuracy;
  TruncationPolicy policy{};
};

// ZETAE_MAX_TERMS, or fallback when unset or malformed.
int max_terms_from_env(int fallback);

// Index of the smallest-magnitude nonzero entry (first one on ties). Returns
// terms.size() when every entry is zero. A truncated sum stops before the
// returned index.
std::size_t optimal_truncation_index(std::span<const std::complex<double>> terms);

// Term-wise sum of (-1)^n (-log(n+q))^m (n+q)^{-z}, accelerated with the
// Cohen-Rodriguez Villegas-Zagier Chebyshev weights. Certified for Re(z) > 0;
// elsewhere the result has certified = false. Throws accuracy_error (with the
// best value) when tol cannot be met within the term budget.
EvalResult zeta_e_oracle(std::complex<double> z, double q, int m, double tol);

// zeta_E(z,q) ~ q^{-z}/2 + z q^{-z-1}/4 - 1/2 sum_{k>=2} E_k(0) (z)_k/k! q^{-z-k}.
EvalResult zeta_e_asymptotic(std::complex<double> z, double q,
                             const TruncationPolicy& policy = {});

// zeta_E'(z,q) ~ q^{-z-1}/4 - zeta_E(z,q) log q - 1/2 sum_{k>=2} c_{k,1}(z) q^{-z-k}.
EvalResult zeta_e_deriv1_asymptotic(std::complex<double> z, double q,
                                    const TruncationPolicy& policy = {});

// zeta_E^{(m)} ~ -sum_{j=1}^{m} C(m,j) zeta_E^{(m-j)} log^j q - 1/2 sum_{k>=2} c_{k,m}(z) q^{-z-k},
// 2 <= m <= kMaxDerivativeOrder.
EvalResult zeta_e_deriv_m_asymptotic(std::complex<double> z, double q, int m,
                                     const TruncationPolicy& policy = {});

// Orders 0..m of the asymptotic family at one point, each built from the
// lower ones.
std::vector<EvalResult> zeta_e_asymptotic_ladder(std::complex<double> z, double q, int m,
                                                 const TruncationPolicy& policy = {});

// zeta_E(-n, q) = E_n(q)/2.
EvalResult zeta_e_special_value(int n, double q);

// zeta_E'(-n, q) in closed polynomial-plus-log form with the remaining
// divergent tail in q^{n-k}.
EvalResult zeta_e_deriv1_neg_int(int n, double q, const TruncationPolicy& policy = {});

enum class SecondDerivForm {
  // -2 zeta' log q - zeta log^2 q - 1/2 sum c_{k,2}(-n) q^{n-k}
  generic,
  // Closed forms: n = 1 display, n >= 2 the general collected form, and for
  // n = 0 the collected form with prefactor 1 on the tail.
  explicit_form,
  // The reference displays for n = 0..3 verbatim, including the
  // prefactor 2 on the n = 0 tail and the -3/2 in the n = 2 q^{-1} term.
  printed,
};

std::string_view to_string(SecondDerivForm form) noexcept;

EvalResult zeta_e_deriv2_neg_int(int n, double q, const TruncationPolicy& policy = {},
                                 SecondDerivForm form = SecondDerivForm::generic);

// Exact polynomial part of zeta_E'(-n, q):
//   sum_e power[e] q^e  +  log q * sum_p log_coeff[p] q^p
// where power holds the q^{n-1}/4 term and the finitely many k <= n terms,
// and log_coeff (ascending) is -E_n(q)/2.
struct NegIntDeriv1Head {
  int n = 0;
  std::map<int, Rational> power;
  std::vector<Rational> log_coeff;

  Rational power_coefficient(int exponent) const;
};
NegIntDeriv1Head deriv1_neg_int_head(int n);

struct ShiftResult {
  std::complex<double> partial_sum;
  double shifted_q = 0.0;
  int sign = 1;  // (-1)^M
  int steps = 0; // M
  double magnitude = 0.0;  // sum of |partial terms|
};

// zeta^{(m)}(z,q) = sum_{j<M} (-1)^j (-log(q+j))^m (q+j)^{-z} + (-1)^M zeta^{(m)}(z,q+M),
// M = max(0, ceil(threshold - q)).
ShiftResult shift_reduce(std::complex<double> z, double q, int m, double threshold);

// max(kRegimeMinQ, 2|z|)
double regime_threshold(std::complex<double> z);

// Strategy dispatcher:
//   z = -n, m = 0          -> special value
//   q >= regime threshold  -> asymptotic family
//   otherwise              -> shift to the threshold, then asymptotic
// When the estimate misses target_accuracy the threshold is doubled once and,
// for Re(z) > 0, the oracle is tried. A result that still misses the target
// carries a warning.
EvalResult evaluate(const EvalRequest& req);

bool is_nonpositive_integer(std::complex<double> z) noexcept;

}  // namespace zetae

#endif  // ZETAE_ZETA_EVAL_HPP
