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

// Product measures on graph space.
//
// A probability assignment P gives each edge index n an independent
// inclusion probability P(n); mu_P is the product measure, and P = 1/2 is
// the Haar measure of the group (G(V), xor). Probabilities entered as exact
// rationals keep every measure exact; probabilities entered as doubles are
// multiplied in scaled long double with a separate binary exponent so that
// deep products neither underflow nor drift.

#ifndef GRAPHSPACE_MEASURES_H_
#define GRAPHSPACE_MEASURES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphspace/dyadic.h"
#include "graphspace/graph.h"
#include "graphspace/rational.h"

namespace graphspace {

// One inclusion probability, exact when it was given as a rational.
struct Probability {
  double value = 0.5;
  std::optional<Rational> exact;

  static Probability of(const Rational& p);
  static Probability of(double p);

  friend bool operator==(const Probability&, const Probability&) = default;
};

class ProbabilityAssignment {
 public:
  enum class Kind : std::uint8_t { kConstant, kTable };

  // Haar: Constant(1/2).
  ProbabilityAssignment() : ProbabilityAssignment(Probability::of(Rational(1, 2))) {}

  // Throws kInvalidProbability outside [0,1].
  static ProbabilityAssignment constant(Probability p);
  // P(n) = entries[n-1] for n <= entries.size(), fallback beyond.
  static ProbabilityAssignment table(std::vector<Probability> entries,
                                     Probability fallback);
  static ProbabilityAssignment haar() { return {}; }

  Kind kind() const { return kind_; }
  const std::vector<Probability>& entries() const { return entries_; }
  const Probability& fallback() const { return fallback_; }

  const Probability& at(EdgeIndex n) const {
    return n <= entries_.size() ? entries_[n - 1] : fallback_;
  }
  double operator()(EdgeIndex n) const { return at(n).value; }

  // Every probability carries an exact rational.
  bool is_exact() const;
  bool is_haar() const;

  friend bool operator==(const ProbabilityAssignment&,
                         const ProbabilityAssignment&) = default;

 private:
  explicit ProbabilityAssignment(Probability p) : fallback_(std::move(p)) {}

  Kind kind_ = Kind::kConstant;
  std::vector<Probability> entries_;
  Probability fallback_;
};

struct MeasureValue {
  std::optional<Rational> exact;
  double value = 0.0;
  // Natural log of the value, -inf for 0. Accurate even when value
  // underflows.
  double log_value = 0.0;
};

// mu_P(E(I0, I1)).
MeasureValue cylinder_measure(const CylinderSet& a,
                              const ProbabilityAssignment& p);

// mu_P({G}): a convergent infinite product, 0 unless all but finitely many
// factors equal 1.
MeasureValue point_mass(const GraphRepr& g, const ProbabilityAssignment& p);

// A ball written as disjoint cylinders with finitely many points added or
// removed.
struct BallDecomposition {
  std::vector<CylinderSet> cylinders;
  std::vector<GraphRepr> added_points;
  std::vector<GraphRepr> removed_points;
};

// Exact decomposition for a radius with a zeros tail, or radius 1. Throws
// kUnsupportedExactRadius for other ones-tail radii and kResourceLimit when
// the radius has more than kMaxDyadicBits digits.
BallDecomposition ball_decomposition(const GraphRepr& center,
                                     const DyadicValue& radius, BallKind kind);

MeasureValue decomposition_measure(const BallDecomposition& d,
                                   const ProbabilityAssignment& p);

// Haar measure of the ball, summed over ball_decomposition.
Rational ball_measure_haar(const GraphRepr& center, const DyadicValue& radius,
                           BallKind kind);

struct MeasureInterval {
  Rational lower;
  Rational upper;
};

// Certified enclosure of the Haar ball measure from the balls at the
// depth-`bits` truncations of the radius just below and above it. Accepts
// any radius, including ones tails.
MeasureInterval ball_measure_bracket(const GraphRepr& center,
                                     const DyadicValue& radius, BallKind kind,
                                     std::size_t bits);
MeasureInterval ball_measure_bracket(const GraphRepr& center,
                                     const Rational& radius, BallKind kind,
                                     std::size_t bits);

struct AtomMassProfile {
  // pi[n-1] = prod_{k <= n} max(P(k), 1 - P(k)).
  std::vector<double> pi;
  std::vector<double> log_pi;
  // Present iff P(k) >= 1/2.
  TruncatedAtom maximal_atom;
  // pi at full depth, exact when P is.
  MeasureValue final_value;
};

// Throws kInvalidArgument for depth 0.
AtomMassProfile atom_mass_profile(const ProbabilityAssignment& p,
                                  std::size_t depth);

struct SampleBatch {
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  std::vector<TruncatedAtom> atoms;

  std::size_t count() const { return atoms.size(); }
  friend bool operator==(const SampleBatch&, const SampleBatch&) = default;
};

// Largest depth * count accepted by sample().
inline constexpr std::uint64_t kMaxSampleBits = std::uint64_t{1} << 32;

// Sample `index` of the stream keyed by `seed`: index k is present iff the
// k-th counter uniform is below P(k).
TruncatedAtom draw_atom(const ProbabilityAssignment& p, std::size_t depth,
                        std::uint64_t seed, std::uint64_t index);
// P(1), ..., P(depth) as doubles.
std::vector<double> probability_prefix(const ProbabilityAssignment& p,
                                       std::size_t depth);
// Same draw as draw_atom with probs = probability_prefix(p, atom.depth()),
// reusing the storage of `atom`.
void draw_atom_into(std::span<const double> probs, std::uint64_t seed,
                    std::uint64_t index, TruncatedAtom& atom);

// Throws kInvalidArgument for zero depth or count and kResourceLimit past
// kMaxSampleBits.
SampleBatch sample(const ProbabilityAssignment& p, std::size_t depth,
                   std::uint64_t seed, std::size_t count);

// Header of three little-endian u64 (depth, count, seed), then one row of
// ceil(depth/8) bytes per atom with index k at bit (k-1)%8 of byte (k-1)/8.
std::vector<std::uint8_t> encode_batch(const SampleBatch& batch);
// Throws kParseError on a malformed frame.
SampleBatch decode_batch(std::span<const std::uint8_t> frame);

}  // namespace graphspace

#endif  // GRAPHSPACE_MEASURES_H_
