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

#include "ymcert/rational.h"

#include <cctype>
#include <string>

#include "ymcert/errors.h"

namespace ymcert {
namespace {

BigInt ParseInteger(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw InvalidInput("malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

BigInt Pow10(long exponent) {
  BigInt p = 1;
  for (long i = 0; i < exponent; ++i) p *= 10;
  return p;
}

Rational ParseDecimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || exp_text.size() > 4) {
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    exponent = ParseInteger(exp_text, whole).convert_to<long>();
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(text);
  }
  Rational value(ParseInteger(digits, whole));
  if (exponent > 0) value *= Rational(Pow10(exponent));
  if (exponent < 0) value /= Rational(Pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (text.empty()) throw InvalidInput("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    BigInt p = ParseInteger(num, whole);
    BigInt q = ParseInteger(den, whole);
    if (q == 0) throw InvalidInput("zero denominator in '" + std::string(whole) + "'");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
  }
  return ParseDecimal(text, whole);
}

std::string FormatRational(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool IsInteger(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

Rational Abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

int Sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace ymcert
