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

#include "graphspace/graph.h"

#include <algorithm>
#include <bit>
#include <string>

#include "graphspace/error.h"

namespace graphspace {
namespace {

using Indices = std::vector<EdgeIndex>;

Indices normalized(Indices v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty() && v.front() == 0) {
    throw Error(ErrorCode::kInvalidIndex, "edge index must be >= 1");
  }
  return v;
}

Indices set_union(std::span<const EdgeIndex> a, std::span<const EdgeIndex> b) {
  Indices out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Indices set_intersection(std::span<const EdgeIndex> a,
                         std::span<const EdgeIndex> b) {
  Indices out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Indices set_difference(std::span<const EdgeIndex> a,
                       std::span<const EdgeIndex> b) {
  Indices out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

Indices set_symmetric_difference(std::span<const EdgeIndex> a,
                                 std::span<const EdgeIndex> b) {
  Indices out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

// Indices of s that lie in g.
Indices members_in(std::span<const EdgeIndex> s, const GraphRepr& g) {
  return g.is_finite() ? set_intersection(s, g.support())
                       : set_difference(s, g.support());
}

// Indices of s that lie outside g.
Indices members_outside(std::span<const EdgeIndex> s, const GraphRepr& g) {
  return g.is_finite() ? set_difference(s, g.support())
                       : set_intersection(s, g.support());
}

}  // namespace

GraphRepr::GraphRepr(GraphKind kind, std::vector<EdgeIndex> support)
    : kind_(kind), support_(std::move(support)) {}

GraphRepr GraphRepr::finite(std::vector<EdgeIndex> present) {
  return GraphRepr(GraphKind::kFinite, normalized(std::move(present)));
}

GraphRepr GraphRepr::cofinite(std::vector<EdgeIndex> absent) {
  return GraphRepr(GraphKind::kCoFinite, normalized(std::move(absent)));
}

bool GraphRepr::contains(EdgeIndex n) const {
  const bool listed = std::binary_search(support_.begin(), support_.end(), n);
  return is_finite() ? listed : !listed;
}

GraphRepr GraphRepr::complement() const {
  return GraphRepr(is_finite() ? GraphKind::kCoFinite : GraphKind::kFinite,
                   support_);
}

GraphRepr sym_diff(const GraphRepr& g, const GraphRepr& h) {
  // Complementing either argument complements the result, so the listed
  // sets always combine by symmetric difference.
  const GraphKind kind =
      g.kind() == h.kind() ? GraphKind::kFinite : GraphKind::kCoFinite;
  Indices s = set_symmetric_difference(g.support(), h.support());
  return kind == GraphKind::kFinite ? GraphRepr::finite(std::move(s))
                                    : GraphRepr::cofinite(std::move(s));
}

GraphRepr intersect(const GraphRepr& g, const GraphRepr& h) {
  if (g.is_finite() && h.is_finite()) {
    return GraphRepr::finite(set_intersection(g.support(), h.support()));
  }
  if (g.is_cofinite() && h.is_cofinite()) {
    return GraphRepr::cofinite(set_union(g.support(), h.support()));
  }
  const GraphRepr& fin = g.is_finite() ? g : h;
  const GraphRepr& cof = g.is_finite() ? h : g;
  return GraphRepr::finite(set_difference(fin.support(), cof.support()));
}

bool contains_edge(const GraphRepr& g, EdgeIndex n) {
  if (n < 1) throw Error(ErrorCode::kInvalidIndex, "edge index must be >= 1");
  return g.contains(n);
}

TruncatedAtom::TruncatedAtom(std::size_t depth)
    : depth_(depth), words_((depth + 63) / 64, 0) {}

TruncatedAtom TruncatedAtom::from_code(std::size_t depth, std::uint64_t code) {
  if (depth > 64) {
    throw Error(ErrorCode::kInvalidArgument, "code atoms have depth <= 64");
  }
  TruncatedAtom atom(depth);
  if (depth > 0) {
    atom.words_[0] = depth == 64 ? code : code & ((std::uint64_t{1} << depth) - 1);
  }
  return atom;
}

TruncatedAtom TruncatedAtom::from_graph(const GraphRepr& g, std::size_t depth) {
  TruncatedAtom atom(depth);
  if (g.is_cofinite()) {
    for (auto& w : atom.words_) w = ~std::uint64_t{0};
    if (depth % 64 != 0) {
      atom.words_.back() = (std::uint64_t{1} << (depth % 64)) - 1;
    }
  }
  for (EdgeIndex n : g.support()) {
    if (n > depth) break;
    atom.set(n, g.is_finite());
  }
  return atom;
}

void TruncatedAtom::set(std::size_t k, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << ((k - 1) & 63);
  if (value) {
    words_[(k - 1) >> 6] |= mask;
  } else {
    words_[(k - 1) >> 6] &= ~mask;
  }
}

std::size_t TruncatedAtom::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

GraphRepr TruncatedAtom::to_finite_graph() const {
  Indices present;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
      present.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)) + 1);
    }
  }
  return GraphRepr::finite(std::move(present));
}

AtomRange atoms_at_depth(std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::kInvalidArgument, "depth must be >= 1");
  if (depth > kMaxAtomDepth) {
    throw Error(ErrorCode::kResourceLimit,
                "atom enumeration beyond depth " +
                    std::to_string(kMaxAtomDepth) + " refused");
  }
  return AtomRange(depth);
}

CylinderSet::CylinderSet(std::vector<EdgeIndex> forbidden,
                         std::vector<EdgeIndex> required)
    : forbidden_(normalized(std::move(forbidden))),
      required_(normalized(std::move(required))) {
  if (!set_intersection(forbidden_, required_).empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "forbidden and required index sets overlap");
  }
}

EdgeIndex CylinderSet::max_index() const {
  EdgeIndex m = 0;
  if (!forbidden_.empty()) m = forbidden_.back();
  if (!required_.empty()) m = std::max(m, required_.back());
  return m;
}

bool CylinderSet::contains(const GraphRepr& g) const {
  return std::none_of(forbidden_.begin(), forbidden_.end(),
                      [&](EdgeIndex n) { return g.contains(n); }) &&
         std::all_of(required_.begin(), required_.end(),
                     [&](EdgeIndex n) { return g.contains(n); });
}

bool CylinderSet::contains(const TruncatedAtom& atom) const {
  if (atom.depth() < max_index()) {
    throw Error(ErrorCode::kInvalidArgument, "atom shallower than cylinder");
  }
  return std::none_of(forbidden_.begin(), forbidden_.end(),
                      [&](EdgeIndex n) { return atom.test(n); }) &&
         std::all_of(required_.begin(), required_.end(),
                     [&](EdgeIndex n) { return atom.test(n); });
}

std::optional<CylinderSet> cyl_intersect(const CylinderSet& a,
                                         const CylinderSet& b) {
  Indices forbidden = set_union(a.forbidden(), b.forbidden());
  Indices required = set_union(a.required(), b.required());
  if (!set_intersection(forbidden, required).empty()) return std::nullopt;
  return CylinderSet(std::move(forbidden), std::move(required));
}

CylinderSet cyl_translate(const CylinderSet& a, const GraphRepr& g) {
  // Adding G flips exactly the constrained coordinates that lie in G.
  Indices forbidden = set_union(members_outside(a.forbidden(), g),
                                members_in(a.required(), g));
  Indices required = set_union(members_outside(a.required(), g),
                               members_in(a.forbidden(), g));
  return CylinderSet(std::move(forbidden), std::move(required));
}

std::pair<CylinderSet, GraphRepr> cyl_to_graph_form(const CylinderSet& a) {
  return {CylinderSet(set_union(a.forbidden(), a.required()), {}),
          GraphRepr::finite(Indices(a.required().begin(), a.required().end()))};
}

namespace {

DyadicValue pow2_radius(std::size_t n) {
  if (n == 0) return DyadicValue::one();
  std::vector<std::uint8_t> bits(n, 0);
  bits.back() = 1;
  return DyadicValue(std::move(bits), Tail::kZeros);
}

// The two extreme points of a cylinder whose constraints are exactly
// {1..n}: the finite graph of its required indices and the co-finite graph
// missing only its forbidden ones.
void append_two_balls(const CylinderSet& c, std::size_t n, BallKind kind,
                      std::vector<Ball>& out) {
  const DyadicValue radius =
      pow2_radius(kind == BallKind::kOpen ? n : n + 1);
  out.push_back({GraphRepr::finite(Indices(c.required().begin(),
                                           c.required().end())),
                 radius, kind});
  out.push_back({GraphRepr::cofinite(Indices(c.forbidden().begin(),
                                             c.forbidden().end())),
                 radius, kind});
}

}  // namespace

std::vector<Ball> cyl_to_balls(const CylinderSet& a, BallKind kind) {
  const EdgeIndex n = a.max_index();
  std::vector<Ball> out;
  if (n == 0 && kind == BallKind::kOpen) {
    out.push_back({GraphRepr::zero(), DyadicValue::one(), BallKind::kOpen});
    out.push_back({GraphRepr::complete(), DyadicValue::zero(),
                   BallKind::kClosed});
    return out;
  }
  Indices constrained = set_union(a.forbidden(), a.required());
  Indices gaps;
  for (EdgeIndex i = 1, j = 0; i <= n; ++i) {
    if (j < constrained.size() && constrained[j] == i) {
      ++j;
    } else {
      gaps.push_back(i);
    }
  }
  if (gaps.size() > 20) {
    throw Error(ErrorCode::kResourceLimit,
                "ball decomposition would need 2^" +
                    std::to_string(gaps.size()) + " pieces");
  }
  const std::uint64_t completions = std::uint64_t{1} << gaps.size();
  out.reserve(2 * completions);
  for (std::uint64_t mask = 0; mask < completions; ++mask) {
    Indices forbidden(a.forbidden().begin(), a.forbidden().end());
    Indices required(a.required().begin(), a.required().end());
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      ((mask >> i) & 1U ? required : forbidden).push_back(gaps[i]);
    }
    append_two_balls(CylinderSet(std::move(forbidden), std::move(required)),
                     n, kind, out);
  }
  return out;
}

std::uint64_t prefix_code(const GraphRepr& g, std::size_t depth) {
  return TruncatedAtom::from_graph(g, std::min<std::size_t>(depth, 64)).code();
}

}  // namespace graphspace
