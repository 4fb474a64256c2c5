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

// The fixed edge labelling of the complete graph on {1, 2, 3, ...}.
//
// Edges are enumerated in colexicographic order:
//
//   psi({u, v}) = (v - 1)(v - 2) / 2 + u,   1 <= u < v,
//
// so {1,2} -> 1, {1,3} -> 2, {2,3} -> 3, {1,4} -> 4, ... Every downstream
// module identifies an edge with its index; this file is the only place the
// vertex pair is visible.

#ifndef GRAPHSPACE_LABELLING_H_
#define GRAPHSPACE_LABELLING_H_

#include <compare>
#include <cstdint>
#include <vector>

namespace graphspace {

using Vertex = std::uint64_t;
using EdgeIndex = std::uint64_t;

// Largest vertex label accepted by psi(); keeps psi() inside 64 bits.
inline constexpr Vertex kMaxVertex = Vertex{1} << 32;

struct Edge {
  Vertex u = 1;
  Vertex v = 2;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Throws kInvalidEdge unless 1 <= u < v <= kMaxVertex.
void validate_edge(const Edge& e);

EdgeIndex psi(const Edge& e);

// Throws kInvalidIndex for n == 0.
Edge psi_inv(EdgeIndex n);

// The edges with index 1..depth, in index order.
std::vector<Edge> prefix_edges(std::uint64_t depth);

// Number of vertices m spanned by the first n edges:
// m(m-1)/2 >= n > (m-1)(m-2)/2. Returns 0 for n == 0.
Vertex prefix_vertex_count(std::uint64_t n);

}  // namespace graphspace

#endif  // GRAPHSPACE_LABELLING_H_
