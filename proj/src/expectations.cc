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

#include "graphspace/expectations.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "graphspace/error.h"
#include "graphspace/parallel.h"

namespace graphspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxEstimatorCount = std::size_t{1} << 31;

void check_k(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability,
                "probability must lie in [0,1], got " + std::to_string(p));
  }
}

std::uint64_t reverse_bits(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(x);
}

// |G|_2 of the truncation, rounded to double.
double heart2_of_atom(const TruncatedAtom& atom) {
  const auto words = atom.words();
  double x = 0.0;
  for (std::size_t w = words.size(); w-- > 0;) {
    x += std::ldexp(static_cast<double>(reverse_bits(words[w])),
                    -64 * static_cast<int>(w + 1));
  }
  return x;
}

template <typename Fn>
void for_each_present(const TruncatedAtom& atom, Fn&& fn) {
  const auto words = atom.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    for (std::uint64_t bits = words[w]; bits != 0; bits &= bits - 1) {
      fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)) + 1);
    }
  }
}

DyadicValue dyadic_of(const Rational& r) {
  if (r == 1) return DyadicValue::one();
  const BigInt den = boost::multiprecision::denominator(r);
  return DyadicValue::from_rational(r, msb(den) + 1);
}

bool is_dyadic(const Rational& r) {
  const BigInt den = boost::multiprecision::denominator(r);
  return (den & (den - 1)) == 0;
}

const Probability* constant_probability(const ProbabilityAssignment& p) {
  return p.kind() == ProbabilityAssignment::Kind::kConstant ? &p.fallback()
                                                            : nullptr;
}

}  // namespace

std::optional<EdgeIndex> psi_k_try(const TruncatedAtom& atom, std::size_t k) {
  check_k(k);
  std::size_t need = k;
  const auto words = atom.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    const auto c = static_cast<std::size_t>(std::popcount(bits));
    if (c < need) {
      need -= c;
      continue;
    }
    for (std::size_t i = 1; i < need; ++i) bits &= bits - 1;
    return w * 64 + static_cast<std::size_t>(std::countr_zero(bits)) + 1;
  }
  return std::nullopt;
}

EdgeIndex psi_k_of_graph(const GraphRepr& g, std::size_t k) {
  check_k(k);
  if (g.is_finite()) {
    if (g.support().size() < k) {
      throw Error(ErrorCode::kUndefinedStatistic,
                  "graph has " + std::to_string(g.support().size()) +
                      " edges, fewer than k = " + std::to_string(k));
    }
    return g.support()[k - 1];
  }
  // Each absent index at or below the running answer pushes it up by one.
  EdgeIndex r = k;
  for (EdgeIndex a : g.support()) {
    if (a > r) break;
    ++r;
  }
  return r;
}

EdgeIndex psi_k_of_graph(const TruncatedAtom& atom, std::size_t k) {
  if (auto r = psi_k_try(atom, k)) return *r;
  throw Error(ErrorCode::kUndefinedStatistic,
              "fewer than k = " + std::to_string(k) +
                  " edges within truncation depth " +
                  std::to_string(atom.depth()));
}

double psi_k_expect(std::size_t k, double p) {
  check_k(k);
  check_p(p);
  if (p == 0.0) {
    throw Error(ErrorCode::kDivergentExpectation,
                "Psi_k has no finite expectation at p = 0");
  }
  return static_cast<double>(k) / p;
}

Rational psi_k_expect(std::size_t k, const Rational& p) {
  check_k(k);
  if (p < 0 || p > 1) {
    throw Error(ErrorCode::kInvalidProbability, "probability must lie in [0,1]");
  }
  if (p == 0) {
    throw Error(ErrorCode::kDivergentExpectation,
                "Psi_k has no finite expectation at p = 0");
  }
  return Rational(static_cast<unsigned long long>(k)) / p;
}

double psi_k_series(std::size_t k, double p, std::uint64_t last) {
  psi_k_expect(k, p);
  if (last < k) return 0.0;
  const double q = 1.0 - p;
  double t = static_cast<double>(k) * std::pow(p, static_cast<double>(k));
  double sum = t;
  for (std::uint64_t n = k; n < last && t > 0.0; ++n) {
    t *= static_cast<double>(n + 1) * q / static_cast<double>(n - k + 1);
    sum += t;
  }
  return sum;
}

std::uint64_t psi_k_series_terms(std::size_t k, double p, double tol) {
  const double target = psi_k_expect(k, p);
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  const double q = 1.0 - p;
  double t = static_cast<double>(k) * std::pow(p, static_cast<double>(k));
  double sum = t;
  std::uint64_t n = k;
  while (target - sum >= tol) {
    if (n - k > 1'000'000'000ULL || t == 0.0) {
      throw Error(ErrorCode::kResourceLimit,
                  "series does not reach the tolerance in 1e9 terms");
    }
    t *= static_cast<double>(n + 1) * q / static_cast<double>(n - k + 1);
    sum += t;
    ++n;
  }
  return n;
}

double insufficiency_probability(std::size_t k, double p, std::size_t depth) {
  check_k(k);
  check_p(p);
  if (p == 1.0) return depth < k ? 1.0 : 0.0;
  if (p == 0.0) return 1.0;
  const double q = 1.0 - p;
  // Binomial terms j = 0..k-1, built from the j = 0 term in log space.
  double log_term = static_cast<double>(depth) * std::log1p(-p);
  double sum = 0.0;
  for (std::size_t j = 0; j < k && j <= depth; ++j) {
    sum += std::exp(log_term);
    log_term += std::log(static_cast<double>(depth - j) /
                         static_cast<double>(j + 1) * p / q);
  }
  return std::min(sum, 1.0);
}

Rational insufficiency_probability(std::size_t k, const Rational& p,
                                   std::size_t depth) {
  check_k(k);
  if (p < 0 || p > 1) {
    throw Error(ErrorCode::kInvalidProbability, "probability must lie in [0,1]");
  }
  const Rational q = 1 - p;
  Rational sum = 0;
  BigInt binom = 1;
  for (std::size_t j = 0; j < k && j <= depth; ++j) {
    Rational term = Rational(binom);
    for (std::size_t i = 0; i < j; ++i) term *= p;
    for (std::size_t i = j; i < depth; ++i) term *= q;
    sum += term;
    binom = binom * (depth - j) / (j + 1);
  }
  return sum;
}

EdgeIndex f_k_dyadic(const DyadicValue& x, std::size_t k) {
  check_k(k);
  if (x.is_zero()) {
    throw Error(ErrorCode::kUndefinedStatistic, "f_k is undefined at 0");
  }
  std::size_t seen = 0;
  const auto& bits = x.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] && ++seen == k) return i + 1;
  }
  if (x.tail() == Tail::kOnes) return bits.size() + (k - seen);
  throw Error(ErrorCode::kUndefinedStatistic,
              "x has " + std::to_string(seen) + " one digits, fewer than k = " +
                  std::to_string(k));
}

BoundedSum norminf_expect(const DecaySequence& zeta,
                          const std::function<double(double)>& f, double p,
                          std::size_t terms, std::optional<double> f_sup) {
  check_p(p);
  if (terms == 0) throw Error(ErrorCode::kInvalidArgument, "terms must be >= 1");
  if (p == 0.0) return {f(0.0), 0.0};
  const std::vector<EdgeIndex> order = sorted_bijection(zeta, terms);
  const double q = 1.0 - p;
  double sup = std::abs(f(0.0));
  double weight = p;
  double sum = 0.0;
  for (EdgeIndex n : order) {
    const double v = f(zeta(n));
    sup = std::max(sup, std::abs(v));
    sum += weight * v;
    weight *= q;
  }
  return {sum, std::pow(q, static_cast<double>(terms)) * f_sup.value_or(sup)};
}

Moments norm1_moments(const WeightSequence& phi, const ProbabilityAssignment& p) {
  const EdgeIndex m = std::max(p.entries().size(), phi.table().size());
  double mean = 0.0;
  double variance = 0.0;
  for (EdgeIndex n = 1; n <= m; ++n) {
    const double pn = p(n);
    const double w = phi(n);
    mean += pn * w;
    variance += pn * (1.0 - pn) * w * w;
  }
  const double pf = p.fallback().value;
  mean += pf * phi.sum_after(m);
  variance += pf * (1.0 - pf) * phi.squared().sum_after(m);
  return {mean, variance + mean * mean, variance};
}

NormxExpectation normx_expect(const MultWeightSequence& phi, double p,
                              unsigned n_exponent) {
  check_p(p);
  if (n_exponent == 0) {
    throw Error(ErrorCode::kInvalidArgument, "exponent must be >= 1");
  }
  NormxExpectation out;
  out.value = std::expm1(phi.log_scaled_product(p));
  out.definition_exponent = phi.norm_exponent();
  out.requested_exponent = n_exponent;
  // |K_V|_x^n = (prod - 1)^{n/m}.
  const double excess = std::expm1(phi.log_total_product());
  const auto holds = [&](unsigned n) {
    const double lhs =
        excess <= 0.0
            ? 0.0
            : std::exp(static_cast<double>(n) / out.definition_exponent *
                       std::log(excess));
    const double rhs = std::ldexp(1.0, static_cast<int>(n)) - 2.0;
    return lhs <= rhs * (1.0 + 1e-12);
  };
  out.hypothesis_definition = holds(out.definition_exponent);
  out.hypothesis_requested = holds(n_exponent);
  out.readings_differ = out.hypothesis_definition != out.hypothesis_requested;
  out.hypothesis_unmet = !out.hypothesis_requested;
  return out;
}

MCEstimate summarize(std::span<const double> values,
                     std::span<const std::uint8_t> undefined) {
  MCEstimate est;
  est.requested = values.size();
  std::vector<double> kept;
  kept.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i < undefined.size() && undefined[i]) {
      ++est.undefined;
    } else if (!std::isfinite(values[i])) {
      ++est.non_finite;
    } else {
      kept.push_back(values[i]);
    }
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kEstimatorFailure,
                "no sample produced a finite value (" +
                    std::to_string(est.undefined) + " undefined, " +
                    std::to_string(est.non_finite) + " non-finite)");
  }
  const auto n = static_cast<double>(kept.size());
  // Centering on the first value keeps a constant statistic exact.
  const double x0 = kept.front();
  std::vector<double> scratch(kept.size());
  std::transform(kept.begin(), kept.end(), scratch.begin(),
                 [x0](double x) { return x - x0; });
  est.mean = x0 + pairwise_sum(scratch) / n;
  std::transform(kept.begin(), kept.end(), scratch.begin(), [&](double x) {
    const double d = x - est.mean;
    return d * d;
  });
  est.count = kept.size();
  est.std_error = kept.size() < 2
                      ? kInf
                      : std::sqrt(pairwise_sum(scratch) / (n - 1.0) / n);
  return est;
}

MCEstimate mc_expect(const AtomStatistic& stat, const ProbabilityAssignment& p,
                     std::size_t depth, std::uint64_t seed, std::size_t count) {
  if (depth == 0 || count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "depth and count must be >= 1");
  }
  if (count > kMaxEstimatorCount) {
    throw Error(ErrorCode::kResourceLimit,
                "estimator count above 2^31 refused");
  }
  const std::vector<double> probs = probability_prefix(p, depth);
  std::vector<double> values(count);
  std::vector<std::uint8_t> undefined(count, 0);
  parallel_for(count, [&](std::size_t begin, std::size_t end) {
    TruncatedAtom atom(depth);
    for (std::size_t i = begin; i < end; ++i) {
      draw_atom_into(probs, seed, i, atom);
      if (const auto v = stat(atom)) {
        values[i] = *v;
      } else {
        values[i] = kNaN;
        undefined[i] = 1;
      }
    }
  });
  MCEstimate est = summarize(values, undefined);
  est.depth = depth;
  est.seed = seed;
  return est;
}

TransferFunction TransferFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::kInvalidFunction, "non-finite coefficient");
    }
  }
  TransferFunction f;
  f.kind_ = Kind::kPolynomial;
  f.name_ = "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, coeffs[i]);
    f.name_ += (i ? "," : "") + std::string(buf, r.ptr);
  }
  f.coeffs_ = std::move(coeffs);
  return f;
}

TransferFunction TransferFunction::indicator(Rational a, Rational b) {
  if (a < 0 || b > 1 || a > b) {
    throw Error(ErrorCode::kInvalidArgument,
                "indicator endpoints must satisfy 0 <= a <= b <= 1");
  }
  TransferFunction f;
  f.kind_ = Kind::kIndicator;
  f.name_ = "indicator:" + to_fraction_string(a) + ":" + to_fraction_string(b);
  f.a_value_ = to_double(a);
  f.b_value_ = to_double(b);
  f.a_ = std::move(a);
  f.b_ = std::move(b);
  return f;
}

TransferFunction TransferFunction::neg_floor_log2() {
  TransferFunction f;
  f.kind_ = Kind::kNegFloorLog2;
  f.name_ = "neg-floor-log2";
  return f;
}

TransferFunction TransferFunction::parse(std::string_view spec) {
  if (spec == "identity") {
    TransferFunction f = polynomial({0.0, 1.0});
    f.name_ = "identity";
    return f;
  }
  if (spec == "square") {
    TransferFunction f = polynomial({0.0, 0.0, 1.0});
    f.name_ = "square";
    return f;
  }
  if (spec == "neg-floor-log2") return neg_floor_log2();
  if (spec.starts_with("poly:")) {
    std::vector<double> coeffs;
    std::string_view rest = spec.substr(5);
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      double c = 0.0;
      const auto r = std::from_chars(item.data(), item.data() + item.size(), c);
      if (item.empty() || r.ec != std::errc() ||
          r.ptr != item.data() + item.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bad polynomial coefficient '" + std::string(item) + "'");
      }
      coeffs.push_back(c);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    TransferFunction f = polynomial(std::move(coeffs));
    f.name_ = std::string(spec);
    return f;
  }
  if (spec.starts_with("indicator:")) {
    const std::string_view rest = spec.substr(10);
    const std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "indicator needs two endpoints: indicator:a:b");
    }
    return indicator(parse_rational(rest.substr(0, colon)),
                     parse_rational(rest.substr(colon + 1)));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown function '" + std::string(spec) +
                  "' (identity, square, poly:..., indicator:a:b, "
                  "neg-floor-log2)");
}

double TransferFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::kPolynomial: {
      double v = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
      return v;
    }
    case Kind::kIndicator:
      return (x >= a_value_ && x <= b_value_) ? 1.0 : 0.0;
    case Kind::kNegFloorLog2:
      return x <= 0.0 ? kInf : -static_cast<double>(std::ilogb(x));
  }
  return kNaN;
}

bool TransferFunction::has_dyadic_breakpoints() const {
  return kind_ == Kind::kIndicator && is_dyadic(a_) && is_dyadic(b_);
}

double TransferFunction::truncation_bias(std::size_t depth) const {
  const double h = std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(depth, 2000)));
  switch (kind_) {
    case Kind::kPolynomial: {
      double lipschitz = 0.0;
      for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        lipschitz += static_cast<double>(i) * std::abs(coeffs_[i]);
      }
      return lipschitz * h;
    }
    case Kind::kIndicator:
      return 2.0 * h;
    case Kind::kNegFloorLog2:
      return (static_cast<double>(depth) + 2.0) * h;
  }
  return kInf;
}

IntervalIntegral interval_integral(const TransferFunction& f) {
  IntervalIntegral out;
  switch (f.kind()) {
    case TransferFunction::Kind::kPolynomial: {
      double error = 0.0;
      out.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
          [&f](double x) { return f(x); }, 0.0, 1.0, 15, 1e-15, &error);
      out.error_estimate = error;
      return out;
    }
    case TransferFunction::Kind::kIndicator:
      out.exact = f.upper() - f.lower();
      break;
    case TransferFunction::Kind::kNegFloorLog2: {
      // f = n on (2^{-n}, 2^{1-n}]; sum n 2^{-n} over n <= 64 plus the
      // closed-form remainder (64 + 2) 2^{-64}.
      Rational sum = 0;
      for (unsigned n = 1; n <= 64; ++n) sum += n * pow2_neg(n);
      out.exact = sum + 66 * pow2_neg(64);
      break;
    }
  }
  out.value = to_double(*out.exact);
  return out;
}

Rational indicator_measure_exact(const TransferFunction& f) {
  if (!f.has_dyadic_breakpoints()) {
    throw Error(ErrorCode::kInvalidFunction,
                "exact path needs an indicator with dyadic endpoints, got " +
                    f.name());
  }
  // {a <= |G|_2 <= b} is the closed ball of radius b minus the open ball of
  // radius a, both centred at the zero graph.
  const GraphRepr zero = GraphRepr::zero();
  return ball_measure_haar(zero, dyadic_of(f.upper()), BallKind::kClosed) -
         ball_measure_haar(zero, dyadic_of(f.lower()), BallKind::kOpen);
}

ChangeOfVariables change_of_variables(const TransferFunction& f,
                                      std::size_t depth, std::uint64_t seed,
                                      std::size_t count) {
  ChangeOfVariables out;
  out.graph_side = mc_expect(
      [&f](const TruncatedAtom& atom) -> std::optional<double> {
        return f(heart2_of_atom(atom));
      },
      ProbabilityAssignment::haar(), depth, seed, count);
  out.graph_side.bias_bound = f.truncation_bias(depth);
  out.interval_side = interval_integral(f);
  if (f.has_dyadic_breakpoints()) out.graph_exact = indicator_measure_exact(f);
  return out;
}

ConverseChangeOfVariables converse_change_of_variables(
    const AtomStatistic& g, std::size_t depth, std::uint64_t seed,
    std::size_t count, std::size_t grid_bits) {
  if (grid_bits == 0 || grid_bits > kMaxAtomDepth || grid_bits >= depth) {
    throw Error(ErrorCode::kInvalidArgument,
                "grid bits must lie in [1, min(depth - 1, " +
                    std::to_string(kMaxAtomDepth) + ")]");
  }
  ConverseChangeOfVariables out;
  out.graph_side =
      mc_expect(g, ProbabilityAssignment::haar(), depth, seed, count);
  const std::size_t cells = std::size_t{1} << grid_bits;
  std::vector<double> values(cells);
  std::vector<std::uint8_t> undefined(cells, 0);
  TruncatedAtom atom(depth);
  for (std::size_t j = 0; j < cells; ++j) {
    // The finite preimage of the midpoint (2j + 1) / 2^{grid_bits + 1}.
    for (std::size_t k = 1; k <= grid_bits; ++k) {
      atom.set(k, (j >> (grid_bits - k)) & 1U);
    }
    atom.set(grid_bits + 1, true);
    if (const auto v = g(atom)) {
      values[j] = *v;
    } else {
      values[j] = kNaN;
      undefined[j] = 1;
    }
  }
  out.interval_side = summarize(values, undefined).mean;
  return out;
}

std::vector<std::string> statistic_names() {
  return {"psi_k", "norm1", "norminf", "normx", "heart2", "f_heart2"};
}

RegisteredStatistic lookup_statistic(std::string_view name,
                                     const StatisticParams& params,
                                     const ProbabilityAssignment& p,
                                     std::size_t depth) {
  if (depth == 0) throw Error(ErrorCode::kInvalidArgument, "depth must be >= 1");
  RegisteredStatistic out;
  out.name = std::string(name);
  const Probability* constant = constant_probability(p);
  const auto need_phi = [&]() -> const WeightSequence& {
    if (!params.phi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "statistic " + out.name + " needs a weight sequence");
    }
    return *params.phi;
  };

  if (name == "psi_k") {
    const std::size_t k = params.k;
    check_k(k);
    out.fn = [k](const TruncatedAtom& atom) -> std::optional<double> {
      if (const auto r = psi_k_try(atom, k)) return static_cast<double>(*r);
      return std::nullopt;
    };
    if (constant) {
      out.closed_form = psi_k_expect(k, constant->value);
      if (constant->exact) out.closed_form_exact = psi_k_expect(k, *constant->exact);
      // E[Psi_k | Psi_k <= d] is off by at most q (d + k/p), q the
      // insufficiency probability.
      out.bias_bound = insufficiency_probability(k, constant->value, depth) *
                       (static_cast<double>(depth) + *out.closed_form);
    }
    return out;
  }
  if (name == "norm1" || name == "heart2") {
    const WeightSequence phi =
        name == "heart2" ? WeightSequence::geometric(2.0) : need_phi();
    std::vector<double> w(depth);
    for (std::size_t n = 1; n <= depth; ++n) w[n - 1] = phi(n);
    if (name == "heart2") {
      out.fn = [](const TruncatedAtom& atom) -> std::optional<double> {
        return heart2_of_atom(atom);
      };
    } else {
      out.fn = [w = std::move(w)](const TruncatedAtom& atom) -> std::optional<double> {
        double s = 0.0;
        for_each_present(atom, [&](std::size_t n) { s += w[n - 1]; });
        return s;
      };
    }
    out.closed_form = norm1_moments(phi, p).mean;
    if (name == "heart2" && p.is_haar() && p.is_exact()) {
      out.closed_form_exact = Rational(1, 2);
    }
    out.bias_bound = phi.sum_after(depth);
    return out;
  }
  if (name == "norminf") {
    const DecaySequence zeta(need_phi());
    std::vector<double> w(depth);
    for (std::size_t n = 1; n <= depth; ++n) w[n - 1] = zeta(n);
    out.fn = [w = std::move(w)](const TruncatedAtom& atom) -> std::optional<double> {
      double m = 0.0;
      for_each_present(atom, [&](std::size_t n) { m = std::max(m, w[n - 1]); });
      return m;
    };
    const auto& table = zeta.values().table();
    double beyond = zeta(std::max<EdgeIndex>(depth, table.size()) + 1);
    for (std::size_t n = depth + 1; n <= table.size(); ++n) {
      beyond = std::max(beyond, table[n - 1]);
    }
    out.bias_bound = beyond;
    if (constant) {
      const BoundedSum e = norminf_expect(
          zeta, [](double x) { return x; }, constant->value, 4096);
      out.closed_form = e.value;
    }
    return out;
  }
  if (name == "normx") {
    const MultWeightSequence phi(need_phi());
    std::vector<double> logs(depth);
    for (std::size_t n = 1; n <= depth; ++n) logs[n - 1] = phi.log_weight(n);
    // (|G|_x)^m with m the definition exponent.
    out.fn = [logs = std::move(logs)](const TruncatedAtom& atom) -> std::optional<double> {
      double s = 0.0;
      for_each_present(atom, [&](std::size_t n) { s += logs[n - 1]; });
      return std::expm1(s);
    };
    out.bias_bound =
        phi.total_product() * std::expm1(phi.excess().sum_after(depth));
    if (constant) {
      out.closed_form =
          normx_expect(phi, constant->value, phi.norm_exponent()).value;
    }
    return out;
  }
  if (name == "f_heart2") {
    if (!params.f) {
      throw Error(ErrorCode::kInvalidArgument, "f_heart2 needs a function");
    }
    const TransferFunction f = *params.f;
    out.fn = [f](const TruncatedAtom& atom) -> std::optional<double> {
      return f(heart2_of_atom(atom));
    };
    out.bias_bound = f.truncation_bias(depth);
    if (p.is_haar()) {
      const IntervalIntegral integral = interval_integral(f);
      out.closed_form = integral.value;
      out.closed_form_exact = integral.exact;
    }
    return out;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown statistic '" + std::string(name) + "'");
}

}  // namespace graphspace
