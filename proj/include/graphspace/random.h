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

// Philox4x32-10 (Salmon et al., "Parallel random numbers: as easy as 1, 2,
// 3", SC'11). A stateless bijection of a 128-bit counter under a 64-bit key,
// so every random word is addressed by (seed, stream, position) and can be
// produced in any order by any thread.

#ifndef GRAPHSPACE_RANDOM_H_
#define GRAPHSPACE_RANDOM_H_

#include <array>
#include <cstdint>

namespace graphspace {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key);

// Two 64-bit words for block `block` of stream `stream` under `seed`.
std::array<std::uint64_t, 2> counter_words(std::uint64_t seed,
                                           std::uint64_t stream,
                                           std::uint64_t block);

// Top 53 bits of a word as a double in [0, 1).
inline double to_unit_interval(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// The k-th uniform (k >= 0) of a stream.
inline double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t k) {
  return to_unit_interval(counter_words(seed, stream, k >> 1)[k & 1]);
}

}  // namespace graphspace

#endif  // GRAPHSPACE_RANDOM_H_
