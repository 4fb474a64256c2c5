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

// Expectations of graph statistics under product measures.
//
// Closed forms sit next to a Monte Carlo estimator that draws depth-d
// truncations through the counter generator. A statistic that cannot be
// evaluated on a truncation (too few visible edges) is excluded and counted,
// never silently replaced. Every closed form here has an estimator twin so
// the two can be compared at a stated number of standard errors.

#ifndef GRAPHSPACE_EXPECTATIONS_H_
#define GRAPHSPACE_EXPECTATIONS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphspace/dyadic.h"
#include "graphspace/graph.h"
#include "graphspace/measures.h"
#include "graphspace/metrics.h"
#include "graphspace/rational.h"

namespace graphspace {

// ---- Psi_k: the k-th smallest present edge index ----

// nullopt when fewer than k indices are present within the truncation.
std::optional<EdgeIndex> psi_k_try(const TruncatedAtom& atom, std::size_t k);

// Throws kUndefinedStatistic when G has fewer than k edges (finite G) or
// the atom shows fewer than k, and kInvalidArgument for k == 0.
EdgeIndex psi_k_of_graph(const GraphRepr& g, std::size_t k);
EdgeIndex psi_k_of_graph(const TruncatedAtom& atom, std::size_t k);

// E[Psi_k] = k/p under Constant(p). Throws kDivergentExpectation for p = 0
// and kInvalidProbability outside [0,1].
double psi_k_expect(std::size_t k, double p);
Rational psi_k_expect(std::size_t k, const Rational& p);

// sum_{n=k}^{last} n C(n-1, k-1) p^k (1-p)^{n-k}, increasing to k/p.
double psi_k_series(std::size_t k, double p, std::uint64_t last);

// The smallest `last` with k/p - psi_k_series(k, p, last) < tol.
std::uint64_t psi_k_series_terms(std::size_t k, double p, double tol);

// P(fewer than k of the first `depth` indices are present) under
// Constant(p), i.e. the chance that a depth-d truncation leaves Psi_k
// undefined.
double insufficiency_probability(std::size_t k, double p, std::size_t depth);
Rational insufficiency_probability(std::size_t k, const Rational& p,
                                   std::size_t depth);

// f_1(x) = -floor(log2 x), f_k(x) = f_1(x - sum_{i<k} 2^{-f_i(x)}): the
// position of the k-th one digit of x, the ones tail included. Throws
// kUndefinedStatistic for x = 0 or when the digits run out.
EdgeIndex f_k_dyadic(const DyadicValue& x, std::size_t k);

// ---- Other closed forms ----

struct BoundedSum {
  double value = 0.0;
  // |exact - value| <= tail_bound.
  double tail_bound = 0.0;
};

// E[f(|G|_inf,zeta)] under Constant(p) for p in [0,1]:
// sum_{n <= terms} p (1-p)^{n-1} f(zeta(pi(n))) with pi = sorted_bijection,
// plus the tail bound (1-p)^terms * f_sup. Without f_sup the supremum is
// taken over the values actually evaluated and f(0).
BoundedSum norminf_expect(const DecaySequence& zeta,
                          const std::function<double(double)>& f, double p,
                          std::size_t terms,
                          std::optional<double> f_sup = std::nullopt);

struct Moments {
  double mean = 0.0;
  double second_moment = 0.0;
  double variance = 0.0;
};

// First two moments of |G|_1,phi under mu_P, in closed form.
Moments norm1_moments(const WeightSequence& phi, const ProbabilityAssignment& p);

struct NormxExpectation {
  // E[(|G|_x)^m] = -1 + prod_n (1 - p + p phi(n)), m = definition exponent.
  double value = 0.0;
  unsigned definition_exponent = 1;
  unsigned requested_exponent = 1;
  // |K_V|_x^n <= 2^n - 2 at n = definition_exponent. Holds by construction
  // of the exponent; recorded so both readings appear side by side.
  bool hypothesis_definition = true;
  // Same inequality at n = requested_exponent.
  bool hypothesis_requested = true;
  bool readings_differ = false;
  bool hypothesis_unmet = false;
};

// Throws kInvalidProbability for p outside [0,1] and kInvalidArgument for
// n_exponent == 0.
NormxExpectation normx_expect(const MultWeightSequence& phi, double p,
                              unsigned n_exponent);

// ---- Monte Carlo ----

// A statistic on truncations; nullopt marks an undefined value.
using AtomStatistic =
    std::function<std::optional<double>(const TruncatedAtom&)>;

struct MCEstimate {
  double mean = 0.0;
  // Sample standard deviation over sqrt(count); +inf for a single value.
  double std_error = 0.0;
  // Samples that entered the mean.
  std::size_t count = 0;
  std::size_t requested = 0;
  std::size_t undefined = 0;
  // Samples whose value was +-inf or NaN; excluded like undefined ones.
  std::size_t non_finite = 0;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  // Bound on |E[truncated statistic] - E[statistic]| when known.
  std::optional<double> bias_bound;
};

// Evaluates `stat` on samples 0..count-1 of the (seed, index) streams.
// Bitwise reproducible for any GRAPHSPACE_THREADS. Throws
// kEstimatorFailure when no sample yields a finite value.
MCEstimate mc_expect(const AtomStatistic& stat, const ProbabilityAssignment& p,
                     std::size_t depth, std::uint64_t seed, std::size_t count);

// Mean, standard error and counts of precomputed values (NaN entries count
// as undefined), with the same reduction as mc_expect.
MCEstimate summarize(std::span<const double> values,
                     std::span<const std::uint8_t> undefined);

// ---- Transfer functions on [0,1] ----

class TransferFunction {
 public:
  enum class Kind : std::uint8_t { kPolynomial, kIndicator, kNegFloorLog2 };

  // "identity", "square", "poly:c0,c1,...", "indicator:a:b" (closed
  // interval, exact rational endpoints), "neg-floor-log2". Throws
  // kInvalidArgument for other names.
  static TransferFunction parse(std::string_view spec);
  static TransferFunction polynomial(std::vector<double> coeffs);
  static TransferFunction indicator(Rational a, Rational b);
  static TransferFunction neg_floor_log2();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  const Rational& lower() const { return a_; }
  const Rational& upper() const { return b_; }

  // +inf for neg-floor-log2 at 0.
  double operator()(double x) const;

  // Both endpoints are dyadic rationals.
  bool has_dyadic_breakpoints() const;

  // Upper bound on |f(x) - f(y)| averaged over x uniform, y the depth-d
  // truncation of x.
  double truncation_bias(std::size_t depth) const;

 private:
  Kind kind_ = Kind::kPolynomial;
  std::string name_;
  std::vector<double> coeffs_;
  Rational a_ = 0;
  Rational b_ = 1;
  double a_value_ = 0.0;
  double b_value_ = 1.0;
};

struct IntervalIntegral {
  double value = 0.0;
  std::optional<Rational> exact;
  double error_estimate = 0.0;
};

// int_0^1 f(x) dx: exact for indicators and neg-floor-log2, adaptive
// Gauss-Kronrod for polynomials.
IntervalIntegral interval_integral(const TransferFunction& f);

// Haar measure of {G : f(|G|_2) = 1} for an indicator with dyadic
// endpoints, summed from cylinder measures of ball decompositions. Throws
// kInvalidFunction otherwise.
Rational indicator_measure_exact(const TransferFunction& f);

struct ChangeOfVariables {
  MCEstimate graph_side;
  IntervalIntegral interval_side;
  std::optional<Rational> graph_exact;
};

// Both sides of E_Haar[f(|G|_2)] = int_0^1 f(x) dx.
ChangeOfVariables change_of_variables(const TransferFunction& f,
                                      std::size_t depth, std::uint64_t seed,
                                      std::size_t count);

struct ConverseChangeOfVariables {
  MCEstimate graph_side;
  // Midpoint rule over the 2^grid_bits dyadic cells, evaluated on the
  // finite preimage of each midpoint.
  double interval_side = 0.0;
};

// E_Haar[g] against int_0^1 g(heart2_inv(x)) dx. Requires
// grid_bits < depth and grid_bits <= kMaxAtomDepth.
ConverseChangeOfVariables converse_change_of_variables(
    const AtomStatistic& g, std::size_t depth, std::uint64_t seed,
    std::size_t count, std::size_t grid_bits);

// ---- Statistic registry ----

struct StatisticParams {
  std::size_t k = 1;
  std::optional<WeightSequence> phi;
  std::optional<TransferFunction> f;
};

struct RegisteredStatistic {
  std::string name;
  AtomStatistic fn;
  std::optional<double> bias_bound;
  // The closed-form expectation, when the measure admits one.
  std::optional<double> closed_form;
  std::optional<Rational> closed_form_exact;
};

// Names: psi_k, norm1, norminf, normx, heart2, f_heart2. norm1/norminf/
// normx need phi; f_heart2 needs f. Throws kInvalidArgument for unknown
// names or missing parameters, and kDivergentExpectation for psi_k at p = 0.
RegisteredStatistic lookup_statistic(std::string_view name,
                                     const StatisticParams& params,
                                     const ProbabilityAssignment& p,
                                     std::size_t depth);

std::vector<std::string> statistic_names();

}  // namespace graphspace

#endif  // GRAPHSPACE_EXPECTATIONS_H_
