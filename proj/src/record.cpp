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

#include "zetae/record.hpp"

#include "zetae/errors.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

namespace zetae {

bool operator==(const OutputRecord& a, const OutputRecord& b) {
  const auto& x = a.result;
  const auto& y = b.result;
  return a.z == b.z && a.q == b.q && a.m == b.m && a.policy == b.policy &&
         a.timestamp == b.timestamp && x.value == y.value &&
         x.error_estimate == y.error_estimate && x.terms_used == y.terms_used &&
         x.method == y.method && x.certified == y.certified && x.warning == y.warning;
}

nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json j{
      {"z_re", r.z.real()},
      {"z_im", r.z.imag()},
      {"q", r.q},
      {"m", r.m},
      {"policy", r.policy.to_string()},
      {"value_re", r.result.value.real()},
      {"value_im", r.result.value.imag()},
      {"error_estimate", r.result.error_estimate},
      {"terms_used", r.result.terms_used},
      {"method", std::string(to_string(r.result.method))},
      {"certified", r.result.certified},
  };
  if (r.result.warning) j["warning"] = *r.result.warning;
  if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  try {
    OutputRecord r;
    r.z = {j.at("z_re").get<double>(), j.at("z_im").get<double>()};
    r.q = j.at("q").get<double>();
    r.m = j.at("m").get<int>();
    r.policy = TruncationPolicy::parse(j.at("policy").get<std::string>());
    r.result.value = {j.at("value_re").get<double>(), j.at("value_im").get<double>()};
    r.result.error_estimate = j.at("error_estimate").get<double>();
    r.result.terms_used = j.at("terms_used").get<int>();
    r.result.method = method_from_string(j.at("method").get<std::string>());
    r.result.certified = j.value("certified", true);
    if (j.contains("warning")) r.result.warning = j.at("warning").get<std::string>();
    if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("malformed record: ") + e.what());
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string to_csv_row(const OutputRecord& r) {
  std::string row;
  row += format_double(r.z.real()) + ',' + format_double(r.z.imag()) + ',';
  row += format_double(r.q) + ',' + std::to_string(r.m) + ',';
  row += format_double(r.result.value.real()) + ',' + format_double(r.result.value.imag()) + ',';
  row += format_double(r.result.error_estimate) + ',' + std::to_string(r.result.terms_used) + ',';
  row += to_string(r.result.method);
  return row;
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s == "" || s == "+") return 1.0;
  if (s == "-") return -1.0;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw domain_error("malformed complex literal '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw domain_error("empty complex literal");
  if (text.back() != 'i') {
    if (text == "+" || text == "-") throw domain_error("malformed complex literal");
    return {parse_real(text, text), 0.0};
  }
  const std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_real(body, text)};
  const std::string_view re = body.substr(0, split);
  if (re.empty()) throw domain_error("malformed complex literal '" + std::string(text) + "'");
  return {parse_real(re, text), parse_real(body.substr(split), text)};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace zetae
