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

#ifndef ZETAE_RECORD_HPP
#define ZETAE_RECORD_HPP

#include "zetae/eval_result.hpp"
#include "zetae/zeta_eval.hpp"

#include <json.hpp>

#include <complex>
#include <string>
#include <string_view>

namespace zetae {

// One evaluation as emitted by the CLI: the request echo plus the result.
struct OutputRecord {
  std::complex<double> z;
  double q = 0.0;
  int m = 0;
  TruncationPolicy policy{};
  EvalResult result{};
  std::string timestamp;  // ISO-8601 UTC; empty in CSV output

  friend bool operator==(const OutputRecord& a, const OutputRecord& b);
};

nlohmann::json to_json(const OutputRecord& record);
// Throws domain_error when fields are missing or malformed.
OutputRecord record_from_json(const nlohmann::json& j);

inline constexpr std::string_view kCsvHeader =
    "z_re,z_im,q,m,value_re,value_im,error_estimate,terms_used,method";
std::string to_csv_row(const OutputRecord& record);

// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

// "a", "bi", "a+bi", "a-bi" (no spaces; "i" alone means 1i). Throws
// domain_error otherwise.
std::complex<double> parse_complex(std::string_view text);

std::string utc_timestamp();

}  // namespace zetae

#endif  // ZETAE_RECORD_HPP
