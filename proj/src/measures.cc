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

#include "graphspace/measures.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "graphspace/error.h"
#include "graphspace/parallel.h"
#include "graphspace/random.h"

namespace graphspace {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Total constrained indices a ball decomposition may materialize.
constexpr std::uint64_t kMaxDecompositionIndices = std::uint64_t{1} << 26;

// A product kept as mantissa * 2^exponent with the mantissa in [1/2, 1).
class ScaledProduct {
 public:
  void multiply(long double f) {
    if (f == 0.0L) {
      zero_ = true;
      return;
    }
    int e = 0;
    mantissa_ = std::frexp(mantissa_ * f, &e);
    exponent_ += e;
  }

  double value() const {
    if (zero_) return 0.0;
    // Exponents below -1100 underflow to 0 either way.
    return std::ldexp(static_cast<double>(mantissa_),
                      static_cast<int>(std::max<long long>(exponent_, -1100)));
  }

  double log_value() const {
    if (zero_) return kNegInf;
    return static_cast<double>(
        std::log(mantissa_) +
        static_cast<long double>(exponent_) * std::numbers::ln2_v<long double>);
  }

 private:
  long double mantissa_ = 0.5L;
  long long exponent_ = 1;
  bool zero_ = false;
};

// An exact product accumulated as separate numerator and denominator.
class ExactProduct {
 public:
  void multiply(const Rational& f) {
    num_ *= boost::multiprecision::numerator(f);
    den_ *= boost::multiprecision::denominator(f);
  }
  Rational value() const { return Rational(num_, den_); }

 private:
  BigInt num_ = 1;
  BigInt den_ = 1;
};

// Multiplies the factor that index n contributes when its membership is
// `present`.
struct ProductAccumulator {
  explicit ProductAccumulator(bool exact) : exact(exact) {}

  void multiply(const Probability& p, bool present) {
    if (exact) {
      product.multiply(present ? *p.exact : Rational(1) - *p.exact);
    } else {
      scaled.multiply(present ? static_cast<long double>(p.value)
                              : 1.0L - static_cast<long double>(p.value));
    }
  }

  MeasureValue result() const {
    MeasureValue m;
    if (exact) {
      m.exact = product.value();
      m.value = to_double(*m.exact);
      m.log_value = *m.exact == 0 ? kNegInf : log_of(*m.exact);
    } else {
      m.value = scaled.value();
      m.log_value = scaled.log_value();
    }
    return m;
  }

  bool exact;
  ExactProduct product;
  ScaledProduct scaled;
};

MeasureValue exact_measure(Rational r) {
  MeasureValue m;
  m.value = to_double(r);
  m.log_value = r == 0 ? kNegInf : log_of(r);
  m.exact = std::move(r);
  return m;
}

void check_probability(const Probability& p) {
  if (!(p.value >= 0.0 && p.value <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "probability must lie in [0,1], got " + std::to_string(p.value));
  }
  if (p.exact && (*p.exact < 0 || *p.exact > 1)) {
    throw Error(ErrorCode::kInvalidProbability,
                "probability must lie in [0,1], got " +
                    to_fraction_string(*p.exact));
  }
}

bool at_least_half(const Probability& p) {
  return p.exact ? *p.exact * 2 >= 1 : p.value >= 0.5;
}

std::vector<EdgeIndex> one_positions(const DyadicValue& d) {
  std::vector<EdgeIndex> out;
  for (std::size_t k = 0; k < d.bits().size(); ++k) {
    if (d.bits()[k]) out.push_back(k + 1);
  }
  return out;
}

}  // namespace

Probability Probability::of(const Rational& p) {
  Probability out{to_double(p), p};
  check_probability(out);
  return out;
}

Probability Probability::of(double p) {
  Probability out{p, std::nullopt};
  check_probability(out);
  return out;
}

ProbabilityAssignment ProbabilityAssignment::constant(Probability p) {
  check_probability(p);
  return ProbabilityAssignment(std::move(p));
}

ProbabilityAssignment ProbabilityAssignment::table(
    std::vector<Probability> entries, Probability fallback) {
  for (const auto& e : entries) check_probability(e);
  check_probability(fallback);
  ProbabilityAssignment out(std::move(fallback));
  out.kind_ = Kind::kTable;
  out.entries_ = std::move(entries);
  return out;
}

bool ProbabilityAssignment::is_exact() const {
  if (!fallback_.exact) return false;
  for (const auto& e : entries_) {
    if (!e.exact) return false;
  }
  return true;
}

bool ProbabilityAssignment::is_haar() const {
  if (fallback_.value != 0.5) return false;
  for (const auto& e : entries_) {
    if (e.value != 0.5) return false;
  }
  return true;
}

MeasureValue cylinder_measure(const CylinderSet& a,
                              const ProbabilityAssignment& p) {
  bool exact = true;
  for (auto set : {a.forbidden(), a.required()}) {
    for (EdgeIndex n : set) exact = exact && p.at(n).exact.has_value();
  }
  if (exact && p.is_haar()) {
    return exact_measure(pow2_neg(a.constrained_count()));
  }
  ProductAccumulator acc(exact);
  for (EdgeIndex n : a.forbidden()) acc.multiply(p.at(n), false);
  for (EdgeIndex n : a.required()) acc.multiply(p.at(n), true);
  return acc.result();
}

MeasureValue point_mass(const GraphRepr& g, const ProbabilityAssignment& p) {
  // Beyond both the table and the support every factor is the same, so the
  // tail product is 1 if that factor is 1 and 0 otherwise.
  const Probability& f = p.fallback();
  const bool tail_present = g.is_cofinite();
  const bool tail_is_one =
      f.exact ? (tail_present ? *f.exact == 1 : *f.exact == 0)
              : (tail_present ? f.value == 1.0 : f.value == 0.0);
  if (!tail_is_one) return exact_measure(Rational(0));
  const EdgeIndex n_max =
      std::max<EdgeIndex>(p.entries().size(), g.max_support_index());
  bool exact = f.exact.has_value();
  for (EdgeIndex n = 1; n <= n_max && exact; ++n) exact = p.at(n).exact.has_value();
  ProductAccumulator acc(exact);
  for (EdgeIndex n = 1; n <= n_max; ++n) acc.multiply(p.at(n), g.contains(n));
  return acc.result();
}

BallDecomposition ball_decomposition(const GraphRepr& center,
                                     const DyadicValue& radius, BallKind kind) {
  BallDecomposition d;
  if (radius.is_one()) {
    d.cylinders.emplace_back();
    if (kind == BallKind::kOpen) d.removed_points.push_back(center.complement());
    return d;
  }
  if (radius.tail() == Tail::kOnes) {
    throw Error(ErrorCode::kUnsupportedExactRadius,
                "radius " + radius.to_string() +
                    " is written with a ones tail; use the bracketing "
                    "helper");
  }
  if (radius.is_zero()) {
    if (kind == BallKind::kClosed) d.added_points.push_back(center);
    return d;
  }
  // With radius 2^{-n_1} + ... + 2^{-n_k} and T_j = {n_1, ..., n_j}, the
  // cylinder C_j of graphs agreeing with T_{j-1} on {1..n_j} holds exactly
  // the norms in [|T_{j-1}|, |T_j|], the top value only at the co-finite
  // point Q_j. The C_j are disjoint and cover [0, radius]; the open ball
  // drops Q_k and the closed ball adds the finite point T_k.
  const std::vector<EdgeIndex> ones = one_positions(radius);
  std::uint64_t budget = 0;
  for (EdgeIndex n : ones) budget += n;
  if (budget > kMaxDecompositionIndices) {
    throw Error(ErrorCode::kResourceLimit,
                "ball decomposition needs " + std::to_string(budget) +
                    " constrained indices");
  }
  std::vector<EdgeIndex> prefix;  // T_{j-1}
  std::vector<EdgeIndex> below;   // {1..n_j} minus T_{j-1}
  for (EdgeIndex n_j : ones) {
    below.clear();
    for (EdgeIndex i = 1, t = 0; i <= n_j; ++i) {
      if (t < prefix.size() && prefix[t] == i) {
        ++t;
      } else {
        below.push_back(i);
      }
    }
    d.cylinders.push_back(cyl_translate(CylinderSet(below, prefix), center));
    if (n_j == ones.back()) {
      if (kind == BallKind::kOpen) {
        d.removed_points.push_back(
            sym_diff(GraphRepr::cofinite(below), center));
      } else {
        std::vector<EdgeIndex> t_k = prefix;
        t_k.push_back(n_j);
        d.added_points.push_back(
            sym_diff(GraphRepr::finite(std::move(t_k)), center));
      }
    }
    prefix.push_back(n_j);
  }
  return d;
}

MeasureValue decomposition_measure(const BallDecomposition& d,
                                   const ProbabilityAssignment& p) {
  std::vector<MeasureValue> plus;
  std::vector<MeasureValue> minus;
  for (const auto& c : d.cylinders) plus.push_back(cylinder_measure(c, p));
  for (const auto& g : d.added_points) plus.push_back(point_mass(g, p));
  for (const auto& g : d.removed_points) minus.push_back(point_mass(g, p));
  bool exact = true;
  for (const auto* v : {&plus, &minus}) {
    for (const auto& m : *v) exact = exact && m.exact.has_value();
  }
  if (exact) {
    Rational total = 0;
    for (const auto& m : plus) total += *m.exact;
    for (const auto& m : minus) total -= *m.exact;
    return exact_measure(std::move(total));
  }
  double total = 0.0;
  for (const auto& m : plus) total += m.value;
  for (const auto& m : minus) total -= m.value;
  total = std::max(total, 0.0);
  return {std::nullopt, total, total == 0.0 ? kNegInf : std::log(total)};
}

Rational ball_measure_haar(const GraphRepr& center, const DyadicValue& radius,
                           BallKind kind) {
  return *decomposition_measure(ball_decomposition(center, radius, kind),
                                ProbabilityAssignment::haar())
              .exact;
}

namespace {

MeasureInterval bracket_from_truncation(const GraphRepr& center,
                                        const DyadicValue& truncated,
                                        std::size_t bits) {
  const Rational upper_radius = truncated.exact() + pow2_neg(bits);
  const DyadicValue upper = upper_radius >= 1
                                ? DyadicValue::one()
                                : DyadicValue::from_rational(upper_radius, bits);
  return {ball_measure_haar(center, truncated, BallKind::kOpen),
          ball_measure_haar(center, upper, BallKind::kClosed)};
}

void check_bracket_bits(std::size_t bits) {
  if (bits == 0 || bits > kMaxDyadicBits) {
    throw Error(ErrorCode::kInvalidArgument,
                "bracket depth must lie in [1, " +
                    std::to_string(kMaxDyadicBits) + "]");
  }
}

}  // namespace

MeasureInterval ball_measure_bracket(const GraphRepr& center,
                                     const DyadicValue& radius, BallKind kind,
                                     std::size_t bits) {
  check_bracket_bits(bits);
  if (radius.is_one() ||
      (radius.tail() == Tail::kZeros && radius.bits().size() <= bits)) {
    const Rational m = ball_measure_haar(center, radius, kind);
    return {m, m};
  }
  std::vector<std::uint8_t> head(bits);
  for (std::size_t k = 1; k <= bits; ++k) head[k - 1] = radius.bit(k) ? 1 : 0;
  return bracket_from_truncation(center, DyadicValue(std::move(head), Tail::kZeros),
                                 bits);
}

MeasureInterval ball_measure_bracket(const GraphRepr& center,
                                     const Rational& radius, BallKind kind,
                                     std::size_t bits) {
  check_bracket_bits(bits);
  if (radius < 0 || radius > 1) {
    throw Error(ErrorCode::kInvalidArgument, "radius must lie in [0,1]");
  }
  if (radius == 1) {
    const Rational m = ball_measure_haar(center, DyadicValue::one(), kind);
    return {m, m};
  }
  bool truncated = false;
  const DyadicValue d = DyadicValue::from_rational(radius, bits, &truncated);
  if (!truncated) {
    const Rational m = ball_measure_haar(center, d, kind);
    return {m, m};
  }
  return bracket_from_truncation(center, d, bits);
}

AtomMassProfile atom_mass_profile(const ProbabilityAssignment& p,
                                  std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::kInvalidArgument, "depth must be >= 1");
  bool exact = true;
  for (EdgeIndex n = 1; n <= depth && exact; ++n) exact = p.at(n).exact.has_value();
  AtomMassProfile out;
  out.pi.reserve(depth);
  out.log_pi.reserve(depth);
  out.maximal_atom = TruncatedAtom(depth);
  ScaledProduct scaled;
  ExactProduct product;
  for (EdgeIndex n = 1; n <= depth; ++n) {
    const Probability& q = p.at(n);
    const bool present = at_least_half(q);
    out.maximal_atom.set(n, present);
    const long double v = static_cast<long double>(q.value);
    scaled.multiply(present ? v : 1.0L - v);
    if (exact) product.multiply(present ? *q.exact : Rational(1) - *q.exact);
    out.pi.push_back(scaled.value());
    out.log_pi.push_back(scaled.log_value());
  }
  if (exact) {
    out.final_value = exact_measure(product.value());
  } else {
    out.final_value = {std::nullopt, out.pi.back(), out.log_pi.back()};
  }
  return out;
}

std::vector<double> probability_prefix(const ProbabilityAssignment& p,
                                       std::size_t depth) {
  std::vector<double> probs(depth);
  for (std::size_t k = 1; k <= depth; ++k) probs[k - 1] = p(k);
  return probs;
}

void draw_atom_into(std::span<const double> probs, std::uint64_t seed,
                    std::uint64_t index, TruncatedAtom& atom) {
  auto words = atom.mutable_words();
  std::fill(words.begin(), words.end(), 0);
  const std::size_t depth = atom.depth();
  for (std::size_t block = 0; 2 * block < depth; ++block) {
    const auto w = counter_words(seed, index, block);
    for (std::size_t half = 0; half < 2; ++half) {
      const std::size_t k = 2 * block + half;  // 0-based index
      if (k >= depth) break;
      if (to_unit_interval(w[half]) < probs[k]) {
        words[k >> 6] |= std::uint64_t{1} << (k & 63);
      }
    }
  }
}

TruncatedAtom draw_atom(const ProbabilityAssignment& p, std::size_t depth,
                        std::uint64_t seed, std::uint64_t index) {
  TruncatedAtom atom(depth);
  draw_atom_into(probability_prefix(p, depth), seed, index, atom);
  return atom;
}

SampleBatch sample(const ProbabilityAssignment& p, std::size_t depth,
                   std::uint64_t seed, std::size_t count) {
  if (depth == 0 || count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "depth and count must be >= 1");
  }
  if (depth > kMaxSampleBits || count > kMaxSampleBits / depth) {
    throw Error(ErrorCode::kResourceLimit,
                "sample of " + std::to_string(count) + " atoms at depth " +
                    std::to_string(depth) + " exceeds the bit budget");
  }
  SampleBatch batch;
  batch.depth = depth;
  batch.seed = seed;
  batch.atoms.assign(count, TruncatedAtom(depth));
  const std::vector<double> probs = probability_prefix(p, depth);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      draw_atom_into(probs, seed, i, batch.atoms[i]);
    }
  });
  return batch;
}

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in[at + i];
  return v;
}

}  // namespace

std::vector<std::uint8_t> encode_batch(const SampleBatch& batch) {
  const std::size_t row = (batch.depth + 7) / 8;
  std::vector<std::uint8_t> out;
  out.reserve(24 + row * batch.count());
  put_u64(out, batch.depth);
  put_u64(out, batch.count());
  put_u64(out, batch.seed);
  for (const auto& atom : batch.atoms) {
    const auto words = atom.words();
    for (std::size_t b = 0; b < row; ++b) {
      out.push_back(static_cast<std::uint8_t>(words[b / 8] >> (8 * (b % 8))));
    }
  }
  return out;
}

SampleBatch decode_batch(std::span<const std::uint8_t> frame) {
  if (frame.size() < 24) {
    throw Error(ErrorCode::kParseError, "sample frame shorter than its header");
  }
  SampleBatch batch;
  batch.depth = get_u64(frame, 0);
  const std::uint64_t count = get_u64(frame, 8);
  batch.seed = get_u64(frame, 16);
  const std::size_t row = (batch.depth + 7) / 8;
  if (batch.depth == 0 || count > (frame.size() - 24) / std::max<std::size_t>(row, 1) ||
      frame.size() != 24 + row * count) {
    throw Error(ErrorCode::kParseError, "sample frame size does not match header");
  }
  batch.atoms.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    TruncatedAtom atom(batch.depth);
    auto words = atom.mutable_words();
    for (std::size_t b = 0; b < row; ++b) {
      words[b / 8] |= static_cast<std::uint64_t>(frame[24 + i * row + b]) << (8 * (b % 8));
    }
    if (batch.depth % 64 != 0 &&
        (words.back() >> (batch.depth % 64)) != 0) {
      throw Error(ErrorCode::kParseError, "padding bits set in sample row");
    }
    batch.atoms.push_back(std::move(atom));
  }
  return batch;
}

}  // namespace graphspace
