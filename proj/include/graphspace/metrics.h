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

// Metrics and norms on graph space.
//
// The base-a weighted Hamming norm |G|_a = sum_{n in G} a^{-n} and its
// metric d_a(G, H) = |G ^ H|_a are evaluated in floating point for general
// a > 1. The dyadic case a = 2 is exact: |G|_2 is the binary fraction whose
// k-th digit is the membership of index k, so finite graphs map to
// terminating expansions and co-finite graphs to expansions ending in ones.
// 2|G|_3 lands on the Cantor set and is likewise exact.
//
// The weighted norms take a weight sequence from a closed-form family
// (geometric, or a finite table followed by a geometric tail) so that the
// norm of the complete graph, which the expectation formulas need, is
// available without truncation.

#ifndef GRAPHSPACE_METRICS_H_
#define GRAPHSPACE_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphspace/dyadic.h"
#include "graphspace/graph.h"
#include "graphspace/rational.h"

namespace graphspace {

// |G|_a. Throws kInvalidBase for a <= 1 and kInvalidArgument for
// precision == 0. Co-finite graphs use the closed-form geometric total, so
// the only error is floating-point rounding, well inside a^{-precision}/(a-1)
// for any precision the double format can resolve.
double heart(const GraphRepr& g, double a, unsigned precision = 64);

double dist(const GraphRepr& g, const GraphRepr& h, double a,
            unsigned precision = 64);

// |G|_2 exactly. Throws kResourceLimit when the largest support index
// exceeds kMaxDyadicBits.
DyadicValue heart2_exact(const GraphRepr& g);

// d_2(G, H) exactly.
DyadicValue dist2_exact(const GraphRepr& g, const GraphRepr& h);

enum class PreimageBranch : std::uint8_t { kFinite, kCoFinite };

struct Preimage {
  GraphRepr graph;
  // The input had more binary digits than were read; `graph` is the finite
  // truncation of the true (infinite, non-co-finite) preimage.
  bool residual = false;
};

// A graph G with heart2_exact(G) == x. Dyadic rationals in (0,1) have one
// finite and one co-finite preimage, selected by `branch`. 0 has only the
// finite preimage and 1 only the co-finite one (K_V); asking for the other
// throws kNoPreimage.
Preimage heart2_inv(const DyadicValue& x,
                    PreimageBranch branch = PreimageBranch::kFinite);

// Same for a rational x in [0,1], reading at most max_bits digits. A
// non-dyadic x yields its depth-max_bits finite truncation with residual set.
Preimage heart2_inv(const Rational& x, std::size_t max_bits,
                    PreimageBranch branch = PreimageBranch::kFinite);

// For a nonempty finite graph with largest index k, the unique co-finite
// graph at the same dyadic norm: equal below k, absent at k, present above.
// Throws kInvalidArgument for other inputs.
GraphRepr collision_dual(const GraphRepr& g);

// Open balls test d < r, closed balls d <= r, both exactly.
bool ball_contains(const Ball& ball, const GraphRepr& g);

// A ternary expansion with digits in {0, 2}.
struct CantorValue {
  enum class Tail : std::uint8_t { kZeros, kTwos };

  std::vector<std::uint8_t> digits;
  Tail tail = Tail::kZeros;

  Rational exact() const;
  double to_double() const;
};

// 2|G|_3: digit k is 2 iff index k is present.
CantorValue cantor_coord(const GraphRepr& g);

// Positive summable weights: a finite table followed by scale * base^{-n}.
class WeightSequence {
 public:
  enum class Kind : std::uint8_t { kGeometric, kTableGeometricTail };

  // weight(n) = base^{-n}.
  static WeightSequence geometric(double base);
  // weight(n) = table[n-1] for n <= table.size(), tail_scale * tail_base^{-n}
  // beyond. Throws kInvalidArgument unless every entry is positive,
  // tail_base > 1 and tail_scale > 0.
  static WeightSequence table_with_tail(std::vector<double> table,
                                        double tail_base, double tail_scale);

  Kind kind() const { return kind_; }
  const std::vector<double>& table() const { return table_; }
  double tail_base() const { return base_; }
  double tail_scale() const { return scale_; }

  double operator()(EdgeIndex n) const;

  // Sum over all n >= 1.
  double total() const { return sum_after(0); }
  // Sum over n > after.
  double sum_after(EdgeIndex after) const;

  // The pointwise square, which stays in the family.
  WeightSequence squared() const;

  friend bool operator==(const WeightSequence&,
                         const WeightSequence&) = default;

 private:
  WeightSequence(Kind kind, std::vector<double> table, double base,
                 double scale);

  Kind kind_ = Kind::kGeometric;
  std::vector<double> table_;
  double base_ = 2.0;
  double scale_ = 1.0;
};

// Positive bounded values accumulating only at 0, used by the max norm.
class DecaySequence {
 public:
  explicit DecaySequence(WeightSequence values) : values_(std::move(values)) {}

  double operator()(EdgeIndex n) const { return values_(n); }
  const WeightSequence& values() const { return values_; }

 private:
  WeightSequence values_;
};

// Multiplicative weights phi(n) = 1 + excess(n) with summable excess, so the
// infinite product converges. Products are accumulated as log sums.
class MultWeightSequence {
 public:
  explicit MultWeightSequence(WeightSequence excess);

  double operator()(EdgeIndex n) const { return 1.0 + excess_(n); }
  double log_weight(EdgeIndex n) const;
  const WeightSequence& excess() const { return excess_; }

  // log of the product over all indices.
  double log_total_product() const { return log_total_; }
  double total_product() const;

  // sum_{n >= 1} log(1 + s * excess(n)) for s in [0, 1]; s = 1 gives
  // log_total_product().
  double log_scaled_product(double s) const;

  // The smallest n >= 1 with 2^n >= 1 + total_product().
  unsigned norm_exponent() const { return exponent_; }

 private:
  WeightSequence excess_;
  double log_total_ = 0.0;
  unsigned exponent_ = 1;
};

// sum_{n in G} phi(n).
double norm1(const GraphRepr& g, const WeightSequence& phi);

// max_{n in G} zeta(n), 0 for the zero graph.
double norminf(const GraphRepr& g, const DecaySequence& zeta);

// (prod_{n in G} phi(n) - 1)^{1/m} with m = phi.norm_exponent().
double normx(const GraphRepr& g, const MultWeightSequence& phi);

// The first `depth` values of an ordering pi of the edge indices with
// zeta(pi(1)) >= zeta(pi(2)) >= ...; equal values keep ascending index
// order. Prefixes are stable as depth grows.
std::vector<EdgeIndex> sorted_bijection(const DecaySequence& zeta,
                                        std::size_t depth);

}  // namespace graphspace

#endif  // GRAPHSPACE_METRICS_H_
