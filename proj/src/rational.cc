// Copyright 2026 The Graphspace Authors
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

#include "graphspace/rational.h"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "graphspace/error.h"

namespace graphspace {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidEdge: return "invalid-edge";
    case ErrorCode::kInvalidIndex: return "invalid-index";
    case ErrorCode::kInvalidBase: return "invalid-base";
    case ErrorCode::kInvalidProbability: return "invalid-probability";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kNoPreimage: return "no-preimage";
    case ErrorCode::kResourceLimit: return "resource-limit";
    case ErrorCode::kUnsupportedExactRadius: return "unsupported-exact-radius";
    case ErrorCode::kUndefinedStatistic: return "undefined-statistic";
    case ErrorCode::kDivergentExpectation: return "divergent-expectation";
    case ErrorCode::kEstimatorFailure: return "estimator-failure";
    case ErrorCode::kInvalidFunction: return "invalid-function";
    case ErrorCode::kParseError: return "parse-error";
  }
  return "unknown";
}

Rational pow2_neg(std::uint64_t k) {
  BigInt den = 1;
  den <<= static_cast<unsigned>(k);
  return Rational(BigInt(1), den);
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorCode::kParseError, "expected digits in '" +
                                            std::string(whole) + "'");
  }
  BigInt v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kParseError,
                  "unexpected character in '" + std::string(whole) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_str(text.substr(e + 1));
    char* end = nullptr;
    exponent = std::strtol(exp_str.c_str(), &end, 10);
    if (exp_str.empty() || *end != '\0') {
      throw Error(ErrorCode::kParseError,
                  "bad exponent in '" + std::string(whole) + "'");
    }
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw Error(ErrorCode::kParseError,
                "empty number '" + std::string(whole) + "'");
  }
  std::string all_digits(int_part);
  all_digits += frac_part;
  BigInt num = parse_digits(all_digits, whole);
  exponent -= static_cast<long>(frac_part.size());
  BigInt scale = 1;
  for (long i = 0; i < std::labs(exponent); ++i) scale *= 10;
  Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash), text);
    Rational den = parse_decimal(text.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kParseError,
                  "zero denominator in '" + std::string(text) + "'");
    }
    return num / den;
  }
  return parse_decimal(text, text);
}

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

// Keeps the top 64 significant bits of |v| and reports the discarded shift.
long double top_bits(const BigInt& v, long& shift) {
  BigInt a = abs(v);
  const long bits = a == 0 ? 0 : static_cast<long>(msb(a)) + 1;
  shift = bits > 64 ? bits - 64 : 0;
  if (shift > 0) a >>= static_cast<unsigned>(shift);
  return static_cast<long double>(a.convert_to<std::uint64_t>());
}

}  // namespace

double to_double(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  long ns = 0;
  long ds = 0;
  long double n = top_bits(num, ns);
  long double d = top_bits(den, ds);
  long double q = std::ldexp(n / d, static_cast<int>(ns - ds));
  return static_cast<double>(num < 0 ? -q : q);
}

double log_of(const Rational& r) {
  if (r <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "log of non-positive rational");
  }
  long ns = 0;
  long ds = 0;
  long double n = top_bits(boost::multiprecision::numerator(r), ns);
  long double d = top_bits(boost::multiprecision::denominator(r), ds);
  return static_cast<double>(std::log(n) - std::log(d) +
                             static_cast<long double>(ns - ds) *
                                 std::log(2.0L));
}

}  // namespace graphspace
