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

#ifndef ZETAE_VERIFY_HPP
#define ZETAE_VERIFY_HPP

// Self-checks over the identities the evaluators are built on. Each check
// reports its largest residual against a fixed tolerance.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zetae {

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;  // worst case, or empty
};

// Reported outcome that is not a pass/fail gate.
struct Finding {
  std::string name;
  std::string text;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<Finding> findings;

  bool passed() const;
};

// Which second-derivative form at z = 0 agrees with the oracle.
struct ZeroOrderAdjudication {
  double q = 0.0;
  double oracle = 0.0;
  double oracle_estimate = 0.0;
  double generic = 0.0;
  double literal = 0.0;
  double generic_residual = 0.0;
  double literal_residual = 0.0;
  // "generic", "literal", "both" or "neither" (within 1e-9 relative).
  std::string matches;
};
ZeroOrderAdjudication adjudicate_zero_order(double q = 30.0);

VerifyReport verify_identities();
VerifyReport verify_derivatives();
VerifyReport verify_section5();

// "identities", "derivatives", "section5" or "all"; throws domain_error
// otherwise.
std::vector<VerifyReport> run_verify(std::string_view suite);

void print_report(std::ostream& os, const VerifyReport& report);

}  // namespace zetae

#endif  // ZETAE_VERIFY_HPP
