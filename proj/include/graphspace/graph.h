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

// Exact points of graph space and the cylinder sets that generate its
// measurable structure.
//
// A graph is a subset of edge indices {1, 2, ...}. Only two families are
// represented exactly: finite graphs (list the edges present) and co-finite
// graphs (list the edges absent). Symmetric difference is the group law and
// intersection the ring product; both families are closed under them.
// Arbitrary graphs appear only as finite-depth truncations (TruncatedAtom).

#ifndef GRAPHSPACE_GRAPH_H_
#define GRAPHSPACE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphspace/dyadic.h"
#include "graphspace/labelling.h"

namespace graphspace {

enum class GraphKind : std::uint8_t { kFinite, kCoFinite };

class GraphRepr {
 public:
  // The zero graph.
  GraphRepr() = default;

  // Support indices may arrive unsorted or repeated; index 0 throws
  // kInvalidIndex.
  static GraphRepr finite(std::vector<EdgeIndex> present);
  static GraphRepr cofinite(std::vector<EdgeIndex> absent);
  static GraphRepr zero() { return {}; }
  static GraphRepr complete() { return cofinite({}); }

  GraphKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == GraphKind::kFinite; }
  bool is_cofinite() const { return kind_ == GraphKind::kCoFinite; }

  // Sorted, duplicate-free. Present edges for finite graphs, absent edges
  // for co-finite ones.
  std::span<const EdgeIndex> support() const { return support_; }

  bool contains(EdgeIndex n) const;

  // K_V minus this graph.
  GraphRepr complement() const;

  // Largest support index, 0 when the support is empty.
  EdgeIndex max_support_index() const {
    return support_.empty() ? 0 : support_.back();
  }

  friend bool operator==(const GraphRepr&, const GraphRepr&) = default;

 private:
  GraphRepr(GraphKind kind, std::vector<EdgeIndex> support);

  GraphKind kind_ = GraphKind::kFinite;
  std::vector<EdgeIndex> support_;
};

GraphRepr sym_diff(const GraphRepr& g, const GraphRepr& h);
GraphRepr intersect(const GraphRepr& g, const GraphRepr& h);
bool contains_edge(const GraphRepr& g, EdgeIndex n);

// The restriction of a graph to indices 1..depth: bit k-1 holds the
// membership of index k. Used as the finite quotient for exhaustive checks
// and as the sample type for Monte Carlo.
class TruncatedAtom {
 public:
  TruncatedAtom() = default;
  explicit TruncatedAtom(std::size_t depth);

  // depth <= 64; bit k-1 of `code` is index k.
  static TruncatedAtom from_code(std::size_t depth, std::uint64_t code);
  static TruncatedAtom from_graph(const GraphRepr& g, std::size_t depth);

  std::size_t depth() const { return depth_; }

  // 1-based index k <= depth.
  bool test(std::size_t k) const {
    return (words_[(k - 1) >> 6] >> ((k - 1) & 63)) & 1U;
  }
  void set(std::size_t k, bool value);

  // Low 64 indices as an integer code.
  std::uint64_t code() const { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  std::size_t count() const;

  // The finite graph with exactly the present indices.
  GraphRepr to_finite_graph() const;

  friend bool operator==(const TruncatedAtom&, const TruncatedAtom&) = default;

 private:
  std::size_t depth_ = 0;
  std::vector<std::uint64_t> words_;
};

inline constexpr std::size_t kMaxAtomDepth = 24;

// All 2^depth atoms at a fixed depth, in code order.
class AtomRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = TruncatedAtom;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = TruncatedAtom;

    iterator() = default;
    iterator(std::size_t depth, std::uint64_t code)
        : depth_(depth), code_(code) {}

    TruncatedAtom operator*() const {
      return TruncatedAtom::from_code(depth_, code_);
    }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++code_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.code_ == b.code_;
    }

   private:
    std::size_t depth_ = 0;
    std::uint64_t code_ = 0;
  };

  explicit AtomRange(std::size_t depth) : depth_(depth) {}

  iterator begin() const { return {depth_, 0}; }
  iterator end() const { return {depth_, std::uint64_t{1} << depth_}; }
  std::uint64_t size() const { return std::uint64_t{1} << depth_; }
  std::size_t depth() const { return depth_; }

 private:
  std::size_t depth_;
};

// Throws kResourceLimit for depth > kMaxAtomDepth, kInvalidArgument for 0.
AtomRange atoms_at_depth(std::size_t depth);

// E(I0, I1): graphs containing every required index and no forbidden one.
class CylinderSet {
 public:
  // The whole space E({}, {}).
  CylinderSet() = default;

  // Throws kInvalidArgument when the two sets meet, kInvalidIndex on 0.
  CylinderSet(std::vector<EdgeIndex> forbidden, std::vector<EdgeIndex> required);

  std::span<const EdgeIndex> forbidden() const { return forbidden_; }
  std::span<const EdgeIndex> required() const { return required_; }

  // Largest constrained index, 0 for the whole space.
  EdgeIndex max_index() const;
  std::size_t constrained_count() const {
    return forbidden_.size() + required_.size();
  }

  bool contains(const GraphRepr& g) const;
  // Requires atom.depth() >= max_index().
  bool contains(const TruncatedAtom& atom) const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

 private:
  std::vector<EdgeIndex> forbidden_;
  std::vector<EdgeIndex> required_;
};

// E(I0 u J0, I1 u J1) = E(I0, I1) n E(J0, J1); nullopt is the empty set.
std::optional<CylinderSet> cyl_intersect(const CylinderSet& a,
                                         const CylinderSet& b);

// E(I0, I1) + G.
CylinderSet cyl_translate(const CylinderSet& a, const GraphRepr& g);

// (E(I0 u I1, {}), I1): translating the first by the second gives back a.
std::pair<CylinderSet, GraphRepr> cyl_to_graph_form(const CylinderSet& a);

enum class BallKind : std::uint8_t { kOpen, kClosed };

// A ball for the dyadic metric d(G, H) = sum over G^H of 2^{-index}.
struct Ball {
  GraphRepr center;
  DyadicValue radius;
  BallKind kind = BallKind::kOpen;

  friend bool operator==(const Ball&, const Ball&) = default;
};

// A list of balls whose union is `a`. With constrained indices exactly
// {1..n} and n >= 1 this is the two-ball form around the finite and
// co-finite extreme points with radius 2^{-n} (open) or 2^{-n-1} (closed);
// gaps below the largest index are filled in every possible way first.
// The whole space is returned as the open unit ball about 0 plus the point
// K_V (a closed ball of radius 0) in the open form.
// Throws kResourceLimit when more than 20 gap indices need filling.
std::vector<Ball> cyl_to_balls(const CylinderSet& a,
                               BallKind kind = BallKind::kOpen);

// The atom code of a graph restricted to indices 1..64.
std::uint64_t prefix_code(const GraphRepr& g, std::size_t depth);

}  // namespace graphspace

#endif  // GRAPHSPACE_GRAPH_H_
