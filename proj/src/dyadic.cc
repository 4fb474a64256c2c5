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

#include "graphspace/dyadic.h"

#include <algorithm>

#include "graphspace/error.h"

namespace graphspace {

DyadicValue::DyadicValue(std::vector<std::uint8_t> bits, Tail tail)
    : bits_(std::move(bits)), tail_(tail) {
  if (bits_.size() > kMaxDyadicBits) {
    throw Error(ErrorCode::kResourceLimit, "dyadic expansion too long");
  }
  for (auto& b : bits_) {
    if (b > 1) throw Error(ErrorCode::kInvalidArgument, "bit must be 0 or 1");
  }
  canonicalize();
}

void DyadicValue::canonicalize() {
  const std::uint8_t implied = tail_ == Tail::kOnes ? 1 : 0;
  while (!bits_.empty() && bits_.back() == implied) bits_.pop_back();
}

DyadicValue DyadicValue::parse(std::string_view text) {
  std::string_view s = text;
  Tail tail = Tail::kZeros;
  if (!s.empty() && s.back() == '~') {
    tail = Tail::kOnes;
    s.remove_suffix(1);
  }
  if (s == "1" || s == "1.0" || s == "1.") {
    if (tail == Tail::kOnes) {
      throw Error(ErrorCode::kParseError, "value above 1: " + std::string(text));
    }
    return one();
  }
  if (s.starts_with("0.")) {
    s.remove_prefix(2);
  } else if (s.starts_with(".")) {
    s.remove_prefix(1);
  } else if (s == "0") {
    s = {};
  } else {
    throw Error(ErrorCode::kParseError,
                "expected a binary fraction in [0,1]: " + std::string(text));
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kParseError,
                  "non-binary digit in " + std::string(text));
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return DyadicValue(std::move(bits), tail);
}

DyadicValue DyadicValue::from_rational(const Rational& r, std::size_t max_bits,
                                       bool* truncated) {
  if (r < 0 || r > 1) {
    throw Error(ErrorCode::kInvalidArgument, "value outside [0,1]");
  }
  if (truncated) *truncated = false;
  if (r == 1) return one();
  std::vector<std::uint8_t> bits;
  Rational rest = r;
  for (std::size_t k = 0; k < max_bits && rest != 0; ++k) {
    rest *= 2;
    if (rest >= 1) {
      bits.push_back(1);
      rest -= 1;
    } else {
      bits.push_back(0);
    }
  }
  if (truncated) *truncated = rest != 0;
  return DyadicValue(std::move(bits), Tail::kZeros);
}

Rational DyadicValue::exact() const {
  // value = (N + tail) / 2^n with N the explicit digits read as an integer.
  const auto n = static_cast<unsigned>(bits_.size());
  BigInt num = tail_ == Tail::kOnes ? 1 : 0;
  for (unsigned k = 0; k < n; ++k) {
    if (bits_[k]) bit_set(num, n - 1 - k);
  }
  BigInt den = 1;
  den <<= n;
  return Rational(num, den);
}

double DyadicValue::to_double() const {
  double v = tail_ == Tail::kOnes ? 1.0 : 0.0;
  for (std::size_t i = bits_.size(); i-- > 0;) v = (v + bits_[i]) * 0.5;
  return v;
}

std::string DyadicValue::to_string() const {
  if (is_one()) return "1";
  std::string s = "0.";
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  if (tail_ == Tail::kOnes) s.push_back('~');
  return s;
}

DyadicValue DyadicValue::with_tail(Tail tail) const {
  if (tail == tail_) return *this;
  if (tail == Tail::kZeros) {
    // 0.b...b 0 111... == 0.b...b 1; the value 1 has no zeros form.
    if (is_one()) {
      throw Error(ErrorCode::kNoPreimage, "1 has no terminating expansion");
    }
    std::vector<std::uint8_t> bits = bits_;
    bits.back() = 1;
    return DyadicValue(std::move(bits), Tail::kZeros);
  }
  if (is_zero()) {
    throw Error(ErrorCode::kNoPreimage, "0 has no expansion ending in ones");
  }
  // 0.b...b 1 000... == 0.b...b 0 111...
  std::vector<std::uint8_t> bits = bits_;
  bits.back() = 0;
  return DyadicValue(std::move(bits), Tail::kOnes);
}

// Lexicographic order of expansions is value order, except that w0111...
// and w1000... are equal.
int compare_values(const DyadicValue& a, const DyadicValue& b) {
  const std::size_t len = std::max(a.bits().size(), b.bits().size());
  std::size_t first = 0;
  for (std::size_t k = 1; k <= len + 1; ++k) {
    if (a.bit(k) != b.bit(k)) {
      first = k;
      break;
    }
  }
  if (first == 0) return 0;
  const DyadicValue& lo = a.bit(first) ? b : a;
  const DyadicValue& hi = a.bit(first) ? a : b;
  bool touching = lo.tail() == Tail::kOnes && hi.tail() == Tail::kZeros;
  for (std::size_t k = first + 1; touching && k <= len; ++k) {
    touching = lo.bit(k) && !hi.bit(k);
  }
  if (touching) return 0;
  return a.bit(first) ? 1 : -1;
}

}  // namespace graphspace
