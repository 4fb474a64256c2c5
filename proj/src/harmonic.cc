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

#include "graphspace/harmonic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "graphspace/error.h"
#include "graphspace/parallel.h"

namespace graphspace {
namespace {

// Stages below this size run on the calling thread.
constexpr std::size_t kParallelButterflyDepth = 16;

void check_table(std::size_t size, std::size_t depth) {
  if (depth > kMaxTransformDepth) {
    throw Error(ErrorCode::kResourceLimit,
                "transform depth " + std::to_string(depth) + " exceeds " +
                    std::to_string(kMaxTransformDepth));
  }
  if (size != (std::size_t{1} << depth)) {
    throw Error(ErrorCode::kInvalidArgument,
                "table has " + std::to_string(size) + " entries, expected 2^" +
                    std::to_string(depth));
  }
}

// In-place butterflies: after the pass, a[S] = sum_G a0[G] chi_S(G).
template <typename T>
void butterfly(std::vector<T>& a, std::size_t depth) {
  const std::size_t pairs = a.size() / 2;
  for (std::size_t s = 0; s < depth; ++s) {
    const std::size_t h = std::size_t{1} << s;
    const auto stage = [&a, h, s](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        // Insert a zero at bit s to get the lower element of pair i.
        const std::size_t lo = ((i >> s) << (s + 1)) | (i & (h - 1));
        const T x = a[lo];
        const T y = a[lo + h];
        a[lo] = x + y;
        a[lo + h] = x - y;
      }
    };
    if (depth >= kParallelButterflyDepth) {
      parallel_for(pairs, stage);
    } else {
      stage(0, pairs);
    }
  }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | in[at + i];
  return v;
}

std::vector<double> get_doubles(std::span<const std::uint8_t> in) {
  std::vector<double> out(in.size() / 8);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::bit_cast<double>(get_u64(in, 8 * i));
  }
  return out;
}

}  // namespace

int walsh_eval(const GraphRepr& e, const GraphRepr& g) {
  if (!e.is_finite()) {
    throw Error(ErrorCode::kInvalidArgument, "characters need a finite index");
  }
  std::size_t overlap = 0;
  for (EdgeIndex n : e.support()) overlap += g.contains(n) ? 1 : 0;
  return overlap % 2 == 0 ? 1 : -1;
}

WalshCharacter::WalshCharacter(GraphRepr e) : e_(std::move(e)) {
  if (!e_.is_finite()) {
    throw Error(ErrorCode::kInvalidArgument, "characters need a finite index");
  }
}

WalshCharacter operator*(const WalshCharacter& a, const WalshCharacter& b) {
  return WalshCharacter(sym_diff(a.e_, b.e_));
}

GraphRepr dual_roundtrip(const WalshCharacter& chi) {
  std::vector<EdgeIndex> present;
  for (EdgeIndex n = 1; n <= chi.index().max_support_index(); ++n) {
    if (chi(GraphRepr::finite({n})) == -1) present.push_back(n);
  }
  return GraphRepr::finite(std::move(present));
}

WalshSpectrum wht(std::span<const double> f, std::size_t depth) {
  check_table(f.size(), depth);
  WalshSpectrum out{depth, std::vector<double>(f.begin(), f.end())};
  butterfly(out.coeffs, depth);
  const double scale = std::ldexp(1.0, -static_cast<int>(depth));
  for (double& c : out.coeffs) c *= scale;
  return out;
}

std::vector<double> inverse_wht(const WalshSpectrum& spectrum) {
  check_table(spectrum.coeffs.size(), spectrum.depth);
  std::vector<double> f = spectrum.coeffs;
  butterfly(f, spectrum.depth);
  return f;
}

std::vector<std::int64_t> wht_integer(std::span<const std::int64_t> f,
                                      std::size_t depth) {
  check_table(f.size(), depth);
  std::vector<std::int64_t> out(f.begin(), f.end());
  butterfly(out, depth);
  return out;
}

std::vector<double> convolve(std::span<const double> f,
                             std::span<const double> g, std::size_t depth) {
  WalshSpectrum a = wht(f, depth);
  const WalshSpectrum b = wht(g, depth);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] *= b.coeffs[i];
  return inverse_wht(a);
}

FiniteSupportMeasure::FiniteSupportMeasure(std::vector<GraphRepr> support,
                                           std::vector<Rational> weights)
    : support_(std::move(support)), weights_(std::move(weights)) {
  if (support_.empty() || support_.size() != weights_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "measure needs matching nonempty support and weights");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (!support_[i].is_finite()) {
      throw Error(ErrorCode::kInvalidArgument, "support graphs must be finite");
    }
    if (weights_[i] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "weights must be nonnegative");
    }
    total += weights_[i];
  }
  if (total != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "weights sum to " + to_fraction_string(total) + ", not 1");
  }
  std::vector<std::vector<EdgeIndex>> keys;
  keys.reserve(support_.size());
  for (const auto& g : support_) {
    keys.emplace_back(g.support().begin(), g.support().end());
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw Error(ErrorCode::kInvalidArgument, "support graphs must be distinct");
  }
}

Rational PositiveDefiniteFunction::exact(const GraphRepr& g) const {
  Rational v = 0;
  for (std::size_t i = 0; i < mu_.support().size(); ++i) {
    if (walsh_eval(mu_.support()[i], g) == 1) {
      v += mu_.weights()[i];
    } else {
      v -= mu_.weights()[i];
    }
  }
  return v;
}

double PositiveDefiniteFunction::operator()(const GraphRepr& g) const {
  return to_double(exact(g));
}

PositiveDefiniteFunction bochner_synthesize(FiniteSupportMeasure mu) {
  return PositiveDefiniteFunction(std::move(mu));
}

BochnerRecovery bochner_recover(std::span<const double> f, std::size_t depth,
                                double tolerance) {
  BochnerRecovery out;
  out.spectrum = wht(f, depth);
  out.min_coefficient =
      *std::min_element(out.spectrum.coeffs.begin(), out.spectrum.coeffs.end());
  out.nonnegative = out.min_coefficient >= -tolerance;
  return out;
}

GramReport gram_check(const std::function<double(const GraphRepr&)>& f,
                      std::span<const GraphRepr> graphs, double tolerance) {
  if (graphs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "gram check needs graphs");
  }
  if (!(tolerance >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be >= 0");
  }
  const auto n = static_cast<Eigen::Index>(graphs.size());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = f(sym_diff(graphs[i], graphs[j]));
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kInvalidFunction,
                    "function value is not finite on a Gram entry");
      }
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kInvalidFunction, "eigen-solver did not converge");
  }
  const auto& eig = solver.eigenvalues();  // ascending
  GramReport out;
  out.size = graphs.size();
  out.min_eigenvalue = eig(0);
  const double spectral = std::max(std::abs(eig(0)), std::abs(eig(n - 1)));
  out.tolerance =
      graphs.size() > 100 ? tolerance * std::max(1.0, spectral) : tolerance;
  out.psd = out.min_eigenvalue >= -out.tolerance;
  return out;
}

int rademacher(const Rational& x, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidIndex, "digit index must be >= 1");
  if (x < 0 || x > 1) {
    throw Error(ErrorCode::kInvalidArgument, "x must lie in [0,1]");
  }
  const Rational scaled = x / pow2_neg(k);
  const BigInt digit_floor =
      boost::multiprecision::numerator(scaled) /
      boost::multiprecision::denominator(scaled);
  return bit_test(digit_floor, 0) ? -1 : 1;
}

int rademacher(double x, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidIndex, "digit index must be >= 1");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "x must lie in [0,1]");
  }
  if (k > 1100) return 1;
  const double scaled = std::floor(std::ldexp(x, static_cast<int>(k)));
  return std::fmod(scaled, 2.0) == 0.0 ? 1 : -1;
}

int walsh_function(const GraphRepr& e, const Rational& x) {
  if (!e.is_finite()) {
    throw Error(ErrorCode::kInvalidArgument, "Walsh functions need finite E");
  }
  int sign = 1;
  for (EdgeIndex n : e.support()) sign *= rademacher(x, n);
  return sign;
}

std::vector<std::uint8_t> encode_table(std::size_t depth,
                                       std::span<const double> values) {
  check_table(values.size(), depth);
  std::vector<std::uint8_t> out;
  out.reserve(8 + 8 * values.size());
  put_u64(out, depth);
  for (double v : values) put_u64(out, std::bit_cast<std::uint64_t>(v));
  return out;
}

DecodedTable decode_table(std::span<const std::uint8_t> bytes,
                          std::optional<std::size_t> expected_depth) {
  DecodedTable out;
  if (bytes.size() >= 8 && bytes.size() % 8 == 0) {
    const std::uint64_t depth = get_u64(bytes, 0);
    if (depth <= kMaxTransformDepth &&
        bytes.size() == 8 + 8 * (std::uint64_t{1} << depth) &&
        (!expected_depth || *expected_depth == depth)) {
      out.depth = depth;
      out.values = get_doubles(bytes.subspan(8));
      out.had_header = true;
      return out;
    }
  }
  if (expected_depth && *expected_depth <= kMaxTransformDepth &&
      bytes.size() == 8 * (std::size_t{1} << *expected_depth)) {
    out.depth = *expected_depth;
    out.values = get_doubles(bytes);
    return out;
  }
  throw Error(ErrorCode::kParseError,
              "table of " + std::to_string(bytes.size()) +
                  " bytes matches neither the framed nor the bare layout");
}

}  // namespace graphspace
