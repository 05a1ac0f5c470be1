// Copyright 2026 The ymcert Authors
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

#ifndef YMCERT_RATIONAL_H_
#define YMCERT_RATIONAL_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ymcert {

// Exact arbitrary-precision rational. All combinatorial weights and flows
// use this type so that saturation and flux integrality are decided exactly.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", "-p/q", an integer, or a finite decimal such as "0.125" or
// "-2.5e-3". Throws InvalidInput on malformed text or a zero denominator.
Rational ParseRational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string FormatRational(const Rational& r);

bool IsInteger(const Rational& r);
double ToDouble(const Rational& r);
Rational Abs(const Rational& r);
int Sign(const Rational& r);

}  // namespace ymcert

#endif  // YMCERT_RATIONAL_H_
