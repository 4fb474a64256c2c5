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

// Exact rational arithmetic shared by the measure and metric layers.

#ifndef GRAPHSPACE_RATIONAL_H_
#define GRAPHSPACE_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphspace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^{-k} as an exact rational.
Rational pow2_neg(std::uint64_t k);

// Parses "a/b", a decimal such as "0.3" or "1e-3", or an integer. Decimal
// input is read exactly, so "0.3" becomes 3/10. Throws kParseError.
Rational parse_rational(std::string_view text);

// "num/den" in lowest terms; integers print without a denominator.
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

// Natural logarithm of a positive rational without overflowing a double
// on huge numerators or denominators.
double log_of(const Rational& r);

}  // namespace graphspace

#endif  // GRAPHSPACE_RATIONAL_H_
