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

#ifndef ZETAE_RATIONAL_HPP
#define ZETAE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zetae {

// Exact rational with arbitrary-size numerator and denominator. Always kept
// in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt binomial(int n, int k);
BigInt factorial(int n);

// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& r);

}  // namespace zetae

#endif  // ZETAE_RATIONAL_HPP
