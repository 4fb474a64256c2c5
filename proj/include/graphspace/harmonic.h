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

// Harmonic analysis on graph space.
//
// The characters are the Walsh functions chi_E(G) = (-1)^{|E ^ G|} for
// finite E, and chi_E * chi_F = chi_{E xor F}. At depth n a function is a
// table over the 2^n atoms, indexed by atom code (bit k-1 is index k), and
// the transform is taken against the uniform probability on atoms:
//
//   coeffs[S] = 2^{-n} sum_G f(G) chi_S(G),   f(G) = sum_S coeffs[S] chi_S(G).
//
// Positive definite functions are built the other way round, as finite
// mixtures of characters with probability weights.

#ifndef GRAPHSPACE_HARMONIC_H_
#define GRAPHSPACE_HARMONIC_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "graphspace/graph.h"
#include "graphspace/rational.h"

namespace graphspace {

// chi_E(G) in {+1, -1}. Throws kInvalidArgument unless E is finite.
int walsh_eval(const GraphRepr& e, const GraphRepr& g);

class WalshCharacter {
 public:
  // The trivial character.
  WalshCharacter() = default;
  // Throws kInvalidArgument unless e is finite.
  explicit WalshCharacter(GraphRepr e);

  const GraphRepr& index() const { return e_; }
  int operator()(const GraphRepr& g) const { return walsh_eval(e_, g); }

  friend WalshCharacter operator*(const WalshCharacter& a,
                                  const WalshCharacter& b);
  friend bool operator==(const WalshCharacter&, const WalshCharacter&) = default;

 private:
  GraphRepr e_;
};

// The finite graph {e : chi({e}) = -1}, probing singletons up to the
// largest index of chi.
GraphRepr dual_roundtrip(const WalshCharacter& chi);

inline constexpr std::size_t kMaxTransformDepth = 24;

struct WalshSpectrum {
  std::size_t depth = 0;
  std::vector<double> coeffs;
};

// Throws kResourceLimit for depth > kMaxTransformDepth and
// kInvalidArgument when f.size() != 2^depth.
WalshSpectrum wht(std::span<const double> f, std::size_t depth);
std::vector<double> inverse_wht(const WalshSpectrum& spectrum);

// The unnormalized transform sum_G f(G) chi_S(G) in exact integers.
std::vector<std::int64_t> wht_integer(std::span<const std::int64_t> f,
                                      std::size_t depth);

// (f * g)(G) = 2^{-n} sum_H f(H) g(G xor H), taken as a pointwise product
// of spectra.
std::vector<double> convolve(std::span<const double> f,
                             std::span<const double> g, std::size_t depth);

// A probability measure on finitely many finite graphs.
class FiniteSupportMeasure {
 public:
  // Throws kInvalidArgument unless the graphs are finite and distinct, the
  // weights nonnegative and summing to exactly 1, and the sizes match.
  FiniteSupportMeasure(std::vector<GraphRepr> support,
                       std::vector<Rational> weights);

  const std::vector<GraphRepr>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<GraphRepr> support_;
  std::vector<Rational> weights_;
};

// f(G) = sum_i w_i chi_{H_i}(G).
class PositiveDefiniteFunction {
 public:
  explicit PositiveDefiniteFunction(FiniteSupportMeasure mu)
      : mu_(std::move(mu)) {}

  Rational exact(const GraphRepr& g) const;
  double operator()(const GraphRepr& g) const;
  const FiniteSupportMeasure& measure() const { return mu_; }

 private:
  FiniteSupportMeasure mu_;
};

PositiveDefiniteFunction bochner_synthesize(FiniteSupportMeasure mu);

struct BochnerRecovery {
  // Candidate weights mu(S) for S within depth, i.e. the spectrum of f.
  WalshSpectrum spectrum;
  double min_coefficient = 0.0;
  bool nonnegative = true;
};

// The finite-depth converse: the spectrum of f restricted to depth-n
// atoms, whose coefficients are the mixture weights when f is positive
// definite and depends only on the first n indices.
BochnerRecovery bochner_recover(std::span<const double> f, std::size_t depth,
                                double tolerance = 1e-9);

struct GramReport {
  std::size_t size = 0;
  double min_eigenvalue = 0.0;
  bool psd = true;
  // The tolerance applied: the requested one, times the largest absolute
  // eigenvalue when size > 100 and that exceeds 1.
  double tolerance = 0.0;
};

// Minimum eigenvalue of (f(G_i xor G_j))_{ij}. Throws kInvalidArgument for
// an empty list and kInvalidFunction on a non-finite value.
GramReport gram_check(const std::function<double(const GraphRepr&)>& f,
                      std::span<const GraphRepr> graphs,
                      double tolerance = 1e-9);

// (-1)^{k-th binary digit of x}, k >= 1.
int rademacher(const Rational& x, std::size_t k);
int rademacher(double x, std::size_t k);

// prod_{k in E} rademacher(x, k) for finite E.
int walsh_function(const GraphRepr& e, const Rational& x);

// Spectrum files: little-endian u64 depth, then 2^depth little-endian
// doubles in atom-code order.
std::vector<std::uint8_t> encode_table(std::size_t depth,
                                       std::span<const double> values);

struct DecodedTable {
  std::size_t depth = 0;
  std::vector<double> values;
  bool had_header = false;
};

// Accepts the framed layout, or a bare array of 2^depth doubles when
// expected_depth is given. Throws kParseError otherwise.
DecodedTable decode_table(std::span<const std::uint8_t> bytes,
                          std::optional<std::size_t> expected_depth);

}  // namespace graphspace

#endif  // GRAPHSPACE_HARMONIC_H_
