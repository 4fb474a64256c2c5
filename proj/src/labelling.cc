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

#include "graphspace/labelling.h"

#include <cmath>
#include <string>

#include "graphspace/error.h"

namespace graphspace {
namespace {

// Triangular number t(m) = m(m-1)/2, the index of edge {m-1, m}.
constexpr std::uint64_t pairs_below(std::uint64_t m) {
  return m < 2 ? 0 : (m % 2 == 0 ? (m / 2) * (m - 1) : m * ((m - 1) / 2));
}

}  // namespace

void validate_edge(const Edge& e) {
  if (e.u < 1 || e.u >= e.v || e.v > kMaxVertex) {
    throw Error(ErrorCode::kInvalidEdge, "edge {" + std::to_string(e.u) + "," +
                                             std::to_string(e.v) +
                                             "} is not a normalized pair");
  }
}

EdgeIndex psi(const Edge& e) {
  validate_edge(e);
  return pairs_below(e.v - 1) + e.u;
}

Edge psi_inv(EdgeIndex n) {
  if (n < 1) throw Error(ErrorCode::kInvalidIndex, "edge index must be >= 1");
  // v is the smallest vertex with pairs_below(v) >= n.
  auto v = static_cast<std::uint64_t>(
      std::ceil((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(n))) / 2.0));
  while (v > 2 && pairs_below(v - 1) >= n) --v;
  while (pairs_below(v) < n) ++v;
  return Edge{n - pairs_below(v - 1), v};
}

std::vector<Edge> prefix_edges(std::uint64_t depth) {
  std::vector<Edge> out;
  out.reserve(depth);
  Edge e{1, 2};
  for (std::uint64_t n = 1; n <= depth; ++n) {
    out.push_back(e);
    if (++e.u == e.v) {
      e.u = 1;
      ++e.v;
    }
  }
  return out;
}

Vertex prefix_vertex_count(std::uint64_t n) {
  return n == 0 ? 0 : psi_inv(n).v;
}

}  // namespace graphspace
