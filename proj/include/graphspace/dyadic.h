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

#ifndef GRAPHSPACE_DYADIC_H_
#define GRAPHSPACE_DYADIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphspace/rational.h"

namespace graphspace {

enum class Tail : std::uint8_t { kZeros, kOnes };

// Longest explicit bit vector we are willing to materialize.
inline constexpr std::size_t kMaxDyadicBits = std::size_t{1} << 22;

// An exact point of [0,1] written in binary: an explicit prefix
// 0.b1 b2 ... bn followed by an infinite run of zeros or ones.
//
// Canonical form strips the explicit trailing run that the tail already
// implies, so 0.1000... is {bits "1", zeros} and 0.0111... is {bits "0",
// ones}. Both encode 1/2; operator== compares representations, and
// exact() compares values.
class DyadicValue {
 public:
  DyadicValue() = default;
  DyadicValue(std::vector<std::uint8_t> bits, Tail tail);

  static DyadicValue zero() { return {}; }
  static DyadicValue one() { return DyadicValue({}, Tail::kOnes); }

  // Accepts "0.0101", ".0101", "1", "0" and an optional "~" suffix meaning
  // the expansion continues with ones ("0.0~" is 0.0111...).
  static DyadicValue parse(std::string_view text);

  // Binary long division of r in [0,1], stopping after max_bits digits.
  // `truncated` reports a nonzero remainder.
  static DyadicValue from_rational(const Rational& r, std::size_t max_bits,
                                   bool* truncated = nullptr);

  const std::vector<std::uint8_t>& bits() const { return bits_; }
  Tail tail() const { return tail_; }

  // Digit k >= 1, including the implied tail.
  bool bit(std::size_t k) const {
    return k <= bits_.size() ? bits_[k - 1] != 0 : tail_ == Tail::kOnes;
  }

  Rational exact() const;
  double to_double() const;
  std::string to_string() const;

  bool is_one() const { return bits_.empty() && tail_ == Tail::kOnes; }
  bool is_zero() const { return bits_.empty() && tail_ == Tail::kZeros; }

  // The same value written with the other tail, when one exists: the zeros
  // form of a nonzero value < 1 and the ones form of a nonzero value < 1.
  DyadicValue with_tail(Tail tail) const;

  friend bool operator==(const DyadicValue&, const DyadicValue&) = default;

 private:
  void canonicalize();

  std::vector<std::uint8_t> bits_;
  Tail tail_ = Tail::kZeros;
};

// Numeric comparison of the encoded values.
int compare_values(const DyadicValue& a, const DyadicValue& b);

}  // namespace graphspace

#endif  // GRAPHSPACE_DYADIC_H_
