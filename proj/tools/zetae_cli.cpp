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

// zetae: evaluate the alternating Hurwitz zeta function and its z-derivatives.
//
//   zetae eval   --z 2 --q 1 [--m 0] [--tol 1e-12] [--policy optimal|fixed:N] [--format json|plain]
//   zetae table  --z-range a:b:step [--z-im y] --q-range a:b:step [--m 0] [--format csv|json] [--out path]
//   zetae coeffs --kind euler|lemma2|c [--k-max 20] [--z 0] [--m 0] [--format csv|json]
//   zetae verify [--suite identities|derivatives|section5|all]
//
// Exit status: 0 success, 1 usage or I/O error, 2 accuracy warning (or a
// failed verification check).

#include "zetae/errors.hpp"
#include "zetae/expansion_coeffs.hpp"
#include "zetae/record.hpp"
#include "zetae/special_numbers.hpp"
#include "zetae/verify.hpp"
#include "zetae/zeta_eval.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAccuracy = 2;

struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const {
    const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) v.push_back(start + static_cast<double>(i) * step);
    return v;
  }
};

Range parse_range(const std::string& text) {
  Range r;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  try {
    if (parts.size() == 1) {
      r.start = r.stop = std::stod(parts[0]);
    } else if (parts.size() == 3) {
      r.start = std::stod(parts[0]);
      r.stop = std::stod(parts[1]);
      r.step = std::stod(parts[2]);
    } else {
      throw zetae::domain_error("");
    }
  } catch (const std::exception&) {
    throw zetae::domain_error("malformed range '" + text + "' (expected a:b:step or a)");
  }
  if (!(r.step > 0.0) || !(r.stop >= r.start)) {
    throw zetae::domain_error("range '" + text + "' is empty or has a non-positive step");
  }
  return r;
}

zetae::OutputRecord run_one(std::complex<double> z, double q, int m, double tol,
                            const zetae::TruncationPolicy& policy) {
  zetae::EvalRequest req;
  req.z = z;
  req.q = q;
  req.m = m;
  req.target_accuracy = tol;
  req.policy = policy;
  zetae::OutputRecord rec;
  rec.z = z;
  rec.q = q;
  rec.m = m;
  rec.policy = policy;
  rec.result = zetae::evaluate(req);
  return rec;
}

// Grid points are claimed from a shared counter; each result lands in its own
// slot so output order is the grid order.
std::vector<zetae::OutputRecord> run_grid(const std::vector<std::complex<double>>& zs,
                                          const std::vector<double>& qs, int m, double tol,
                                          const zetae::TruncationPolicy& policy) {
  const std::size_t total = zs.size() * qs.size();
  std::vector<zetae::OutputRecord> out(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        out[i] = run_one(zs[i / qs.size()], qs[i % qs.size()], m, tol, policy);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(hw, total));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string plain_value(const zetae::OutputRecord& r) {
  std::string s = zetae::format_double(r.result.value.real());
  if (r.result.value.imag() != 0.0) {
    const double im = r.result.value.imag();
    s += (im < 0 ? "-" : "+") + zetae::format_double(std::fabs(im)) + "i";
  }
  return s;
}

template <class Write>
int with_output(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return std::cout ? kExitOk : kExitUsage;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitUsage;
  }
  write(file);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating Hurwitz zeta function zeta_E(z,q) and its z-derivatives"};
  app.require_subcommand(1);

  std::string z_text = "0";
  double q = 1.0;
  int m = 0;
  double tol = zetae::kDefaultTargetAccuracy;
  std::string policy_text = "optimal";
  std::string format;

  auto* eval = app.add_subcommand("eval", "Evaluate zeta_E^(m)(z,q) at one point");
  eval->add_option("--z", z_text, "complex literal: a, bi or a+bi")->required();
  eval->add_option("--q", q, "real q > 0")->required();
  eval->add_option("--m", m, "derivative order in z")->check(CLI::Range(0, zetae::kMaxDerivativeOrder));
  eval->add_option("--tol", tol, "relative target accuracy")->check(CLI::PositiveNumber);
  eval->add_option("--policy", policy_text, "optimal or fixed:N");
  eval->add_option("--format", format, "json or plain")->check(CLI::IsMember({"json", "plain"}));

  std::string z_range;
  std::string q_range;
  double z_im = 0.0;
  std::string out_path;
  auto* table = app.add_subcommand("table", "Evaluate on a z x q grid");
  table->add_option("--z-range", z_range, "real part of z: a:b:step")->required();
  table->add_option("--z-im", z_im, "imaginary part of z");
  table->add_option("--q-range", q_range, "q: a:b:step")->required();
  table->add_option("--m", m, "derivative order in z")->check(CLI::Range(0, zetae::kMaxDerivativeOrder));
  table->add_option("--tol", tol, "relative target accuracy")->check(CLI::PositiveNumber);
  table->add_option("--policy", policy_text, "optimal or fixed:N");
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output file (default stdout)");

  std::string kind = "euler";
  int k_max = 20;
  auto* coeffs = app.add_subcommand("coeffs", "Dump E_k(0), d/dz (z)_k/k! or c_{k,m}(z) coefficients");
  coeffs->add_option("--kind", kind, "euler, lemma2 or c")->check(CLI::IsMember({"euler", "lemma2", "c"}));
  coeffs->add_option("--k-max", k_max, "largest k")->check(CLI::Range(0, zetae::kDefaultMaxEulerIndex));
  coeffs->add_option("--z", z_text, "complex literal for lemma2 and c");
  coeffs->add_option("--m", m, "nesting depth for c")->check(CLI::Range(0, zetae::kMaxDerivativeOrder));
  coeffs->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  coeffs->add_option("--out", out_path, "output file (default stdout)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the identity and cross-check suites");
  verify->add_option("--suite", suite, "identities, derivatives, section5 or all")
      ->check(CLI::IsMember({"identities", "derivatives", "section5", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    const zetae::TruncationPolicy policy = zetae::TruncationPolicy::parse(policy_text);

    if (*eval) {
      zetae::OutputRecord rec = run_one(zetae::parse_complex(z_text), q, m, tol, policy);
      rec.timestamp = zetae::utc_timestamp();
      if (format == "plain") {
        std::cout << plain_value(rec) << "\n";
      } else {
        std::cout << zetae::to_json(rec).dump(2) << "\n";
      }
      if (rec.result.warning) std::cerr << "warning: " << *rec.result.warning << "\n";
      return rec.result.warning ? kExitAccuracy : kExitOk;
    }

    if (*table) {
      std::vector<std::complex<double>> zs;
      for (double re : parse_range(z_range).values()) zs.emplace_back(re, z_im);
      const std::vector<double> qs = parse_range(q_range).values();
      const auto records = run_grid(zs, qs, m, tol, policy);
      const bool json = format == "json";
      const std::string stamp = json ? zetae::utc_timestamp() : std::string{};
      const int rc = with_output(out_path, [&](std::ostream& os) {
        if (json) {
          nlohmann::json arr = nlohmann::json::array();
          for (auto rec : records) {
            rec.timestamp = stamp;
            arr.push_back(zetae::to_json(rec));
          }
          os << arr.dump(2) << "\n";
        } else {
          os << zetae::kCsvHeader << "\n";
          for (const auto& rec : records) os << zetae::to_csv_row(rec) << "\n";
        }
      });
      if (rc != kExitOk) return rc;
      const auto warned = std::count_if(records.begin(), records.end(),
                                        [](const auto& r) { return r.result.warning.has_value(); });
      if (warned > 0) {
        std::cerr << "warning: " << warned << " grid point(s) missed the requested accuracy\n";
        return kExitAccuracy;
      }
      return kExitOk;
    }

    if (*coeffs) {
      const std::complex<double> z = zetae::parse_complex(z_text);
      const bool json = format == "json";
      nlohmann::json arr = nlohmann::json::array();
      std::ostringstream csv;
      const int k_min = kind == "c" ? 2 : kind == "lemma2" ? 1 : 0;
      if (kind == "euler") csv << "k,numerator,denominator,value\n";
      else csv << "k,value_re,value_im\n";
      zetae::CoefficientCache cache(z);
      for (int k = k_min; k <= k_max; ++k) {
        if (kind == "euler") {
          const zetae::Rational& e = zetae::EulerNumberTable::instance().exact(k);
          const std::string num = boost::multiprecision::numerator(e).str();
          const std::string den = boost::multiprecision::denominator(e).str();
          const double v = zetae::to_double(e);
          csv << k << "," << num << "," << den << "," << zetae::format_double(v) << "\n";
          arr.push_back({{"k", k}, {"numerator", num}, {"denominator", den}, {"value", v}});
        } else {
          const std::complex<double> v =
              kind == "lemma2" ? zetae::lemma2_coefficient(z, k) : cache.coefficient(k, m);
          csv << k << "," << zetae::format_double(v.real()) << "," << zetae::format_double(v.imag())
              << "\n";
          arr.push_back({{"k", k}, {"value_re", v.real()}, {"value_im", v.imag()}});
        }
      }
      return with_output(out_path, [&](std::ostream& os) {
        if (json) os << arr.dump(2) << "\n";
        else os << csv.str();
      });
    }

    if (*verify) {
      bool ok = true;
      for (const auto& report : zetae::run_verify(suite)) {
        zetae::print_report(std::cout, report);
        ok = ok && report.passed();
      }
      std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
      return ok ? kExitOk : kExitAccuracy;
    }
  } catch (const zetae::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
