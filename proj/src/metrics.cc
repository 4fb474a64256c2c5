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

#include "graphspace/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "graphspace/error.h"

namespace graphspace {
namespace {

void check_base(double a) {
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kInvalidBase,
                "base must be a finite real > 1, got " + std::to_string(a));
  }
}

void check_bits(EdgeIndex max_index) {
  if (max_index > kMaxDyadicBits) {
    throw Error(ErrorCode::kResourceLimit,
                "index " + std::to_string(max_index) +
                    " exceeds the exact dyadic range");
  }
}

double sum_powers(std::span<const EdgeIndex> indices, double a) {
  // Smallest terms first.
  double s = 0.0;
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    s += std::pow(a, -static_cast<double>(*it));
  }
  return s;
}

// sum_{j >= 0} log(1 + x0 r^j) for 0 <= x0, 0 < r < 1. Leading terms are
// taken one by one until x0 <= 1/2, the rest from the power series
// sum_i (-1)^{i+1} x0^i / (i (1 - r^i)).
double log1p_geometric_sum(double x0, double r) {
  double sum = 0.0;
  for (int guard = 0; x0 > 0.5 && guard < 10'000'000; ++guard) {
    sum += std::log1p(x0);
    x0 *= r;
  }
  if (x0 <= 0.0) return sum;
  const double log_r = std::log(r);
  double power = 1.0;
  double series = 0.0;
  for (int i = 1; i <= 400; ++i) {
    power *= x0;
    const double term = power / (i * -std::expm1(i * log_r));
    series += (i % 2 == 1) ? term : -term;
    if (term < 1e-19 * std::abs(series)) break;
  }
  return sum + series;
}

}  // namespace

double heart(const GraphRepr& g, double a, unsigned precision) {
  check_base(a);
  if (precision == 0) {
    throw Error(ErrorCode::kInvalidArgument, "precision must be >= 1");
  }
  const double listed = sum_powers(g.support(), a);
  return g.is_finite() ? listed : 1.0 / (a - 1.0) - listed;
}

double dist(const GraphRepr& g, const GraphRepr& h, double a,
            unsigned precision) {
  return heart(sym_diff(g, h), a, precision);
}

DyadicValue heart2_exact(const GraphRepr& g) {
  const EdgeIndex len = g.max_support_index();
  check_bits(len);
  const std::uint8_t listed = g.is_finite() ? 1 : 0;
  std::vector<std::uint8_t> bits(len, 1 - listed);
  for (EdgeIndex n : g.support()) bits[n - 1] = listed;
  return DyadicValue(std::move(bits),
                     g.is_finite() ? Tail::kZeros : Tail::kOnes);
}

DyadicValue dist2_exact(const GraphRepr& g, const GraphRepr& h) {
  return heart2_exact(sym_diff(g, h));
}

Preimage heart2_inv(const DyadicValue& x, PreimageBranch branch) {
  if (branch == PreimageBranch::kFinite) {
    if (x.is_one()) {
      throw Error(ErrorCode::kNoPreimage, "1 has no finite preimage");
    }
    const DyadicValue z = x.with_tail(Tail::kZeros);
    std::vector<EdgeIndex> present;
    for (std::size_t k = 1; k <= z.bits().size(); ++k) {
      if (z.bits()[k - 1]) present.push_back(k);
    }
    return {GraphRepr::finite(std::move(present)), false};
  }
  if (x.is_zero()) {
    throw Error(ErrorCode::kNoPreimage, "0 has no co-finite preimage");
  }
  const DyadicValue o = x.with_tail(Tail::kOnes);
  std::vector<EdgeIndex> absent;
  for (std::size_t k = 1; k <= o.bits().size(); ++k) {
    if (!o.bits()[k - 1]) absent.push_back(k);
  }
  return {GraphRepr::cofinite(std::move(absent)), false};
}

Preimage heart2_inv(const Rational& x, std::size_t max_bits,
                    PreimageBranch branch) {
  bool truncated = false;
  const DyadicValue d = DyadicValue::from_rational(x, max_bits, &truncated);
  if (!truncated) return heart2_inv(d, branch);
  Preimage p = heart2_inv(d, PreimageBranch::kFinite);
  p.residual = true;
  return p;
}

GraphRepr collision_dual(const GraphRepr& g) {
  if (!g.is_finite() || g.support().empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "collision dual needs a nonempty finite graph");
  }
  const EdgeIndex k = g.max_support_index();
  std::vector<EdgeIndex> absent;
  for (EdgeIndex n = 1; n < k; ++n) {
    if (!g.contains(n)) absent.push_back(n);
  }
  absent.push_back(k);
  return GraphRepr::cofinite(std::move(absent));
}

bool ball_contains(const Ball& ball, const GraphRepr& g) {
  const int c = compare_values(dist2_exact(g, ball.center), ball.radius);
  return ball.kind == BallKind::kOpen ? c < 0 : c <= 0;
}

Rational CantorValue::exact() const {
  Rational v = tail == Tail::kTwos ? Rational(1) : Rational(0);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v = (v + *it) / 3;
  }
  return v;
}

double CantorValue::to_double() const {
  double v = tail == Tail::kTwos ? 1.0 : 0.0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v = (v + *it) / 3.0;
  }
  return v;
}

CantorValue cantor_coord(const GraphRepr& g) {
  const EdgeIndex len = g.max_support_index();
  check_bits(len);
  CantorValue c;
  c.tail = g.is_finite() ? CantorValue::Tail::kZeros : CantorValue::Tail::kTwos;
  c.digits.assign(len, 0);
  for (EdgeIndex n = 1; n <= len; ++n) c.digits[n - 1] = g.contains(n) ? 2 : 0;
  return c;
}

WeightSequence::WeightSequence(Kind kind, std::vector<double> table,
                               double base, double scale)
    : kind_(kind), table_(std::move(table)), base_(base), scale_(scale) {}

WeightSequence WeightSequence::geometric(double base) {
  check_base(base);
  return WeightSequence(Kind::kGeometric, {}, base, 1.0);
}

WeightSequence WeightSequence::table_with_tail(std::vector<double> table,
                                               double tail_base,
                                               double tail_scale) {
  check_base(tail_base);
  if (!(tail_scale > 0.0) || !std::isfinite(tail_scale)) {
    throw Error(ErrorCode::kInvalidArgument, "tail scale must be positive");
  }
  for (double w : table) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weights must be positive and finite");
    }
  }
  return WeightSequence(Kind::kTableGeometricTail, std::move(table), tail_base,
                        tail_scale);
}

double WeightSequence::operator()(EdgeIndex n) const {
  if (n < 1) throw Error(ErrorCode::kInvalidIndex, "edge index must be >= 1");
  if (n <= table_.size()) return table_[n - 1];
  return scale_ * std::pow(base_, -static_cast<double>(n));
}

double WeightSequence::sum_after(EdgeIndex after) const {
  const EdgeIndex len = table_.size();
  const EdgeIndex tail_from = std::max(after, len);
  double s = scale_ * std::pow(base_, -static_cast<double>(tail_from)) /
             (base_ - 1.0);
  for (EdgeIndex n = len; n > after; --n) s += table_[n - 1];
  return s;
}

WeightSequence WeightSequence::squared() const {
  std::vector<double> sq(table_.size());
  std::transform(table_.begin(), table_.end(), sq.begin(),
                 [](double w) { return w * w; });
  return WeightSequence(kind_, std::move(sq), base_ * base_, scale_ * scale_);
}

MultWeightSequence::MultWeightSequence(WeightSequence excess)
    : excess_(std::move(excess)) {
  log_total_ = log_scaled_product(1.0);
  const double bound = 1.0 + total_product();
  while (std::ldexp(1.0, static_cast<int>(exponent_)) < bound) ++exponent_;
}

double MultWeightSequence::log_weight(EdgeIndex n) const {
  return std::log1p(excess_(n));
}

double MultWeightSequence::total_product() const {
  return std::exp(log_total_);
}

double MultWeightSequence::log_scaled_product(double s) const {
  if (s < 0.0 || s > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "scale must lie in [0,1]");
  }
  if (s == 0.0) return 0.0;
  double sum = 0.0;
  for (double w : excess_.table()) sum += std::log1p(s * w);
  const auto first_tail = static_cast<double>(excess_.table().size() + 1);
  const double x0 = s * excess_.tail_scale() *
                    std::pow(excess_.tail_base(), -first_tail);
  return sum + log1p_geometric_sum(x0, 1.0 / excess_.tail_base());
}

double norm1(const GraphRepr& g, const WeightSequence& phi) {
  double listed = 0.0;
  const auto s = g.support();
  for (auto it = s.rbegin(); it != s.rend(); ++it) listed += phi(*it);
  return g.is_finite() ? listed : phi.total() - listed;
}

double norminf(const GraphRepr& g, const DecaySequence& zeta) {
  if (g.is_finite()) {
    double m = 0.0;
    for (EdgeIndex n : g.support()) m = std::max(m, zeta(n));
    return m;
  }
  // The largest value among the present indices is the first index in
  // descending order that the co-finite graph does not exclude.
  const auto order = sorted_bijection(zeta, g.support().size() + 1);
  for (EdgeIndex n : order) {
    if (g.contains(n)) return zeta(n);
  }
  return 0.0;  // unreachable: the order has more entries than absences
}

double normx(const GraphRepr& g, const MultWeightSequence& phi) {
  double listed = 0.0;
  for (EdgeIndex n : g.support()) listed += phi.log_weight(n);
  const double log_prod =
      g.is_finite() ? listed : phi.log_total_product() - listed;
  const double excess = std::max(0.0, std::expm1(log_prod));
  if (excess == 0.0) return 0.0;
  return std::pow(excess, 1.0 / phi.norm_exponent());
}

std::vector<EdgeIndex> sorted_bijection(const DecaySequence& zeta,
                                        std::size_t depth) {
  const auto& table = zeta.values().table();
  std::vector<EdgeIndex> by_value(table.size());
  std::iota(by_value.begin(), by_value.end(), EdgeIndex{1});
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](EdgeIndex a, EdgeIndex b) {
                     return table[a - 1] > table[b - 1];
                   });
  // Merge the sorted table with the strictly decreasing geometric tail. On
  // ties the table entry wins since its index is lower.
  std::vector<EdgeIndex> out;
  out.reserve(depth);
  std::size_t i = 0;
  EdgeIndex tail = table.size() + 1;
  while (out.size() < depth) {
    if (i < by_value.size() && table[by_value[i] - 1] >= zeta(tail)) {
      out.push_back(by_value[i++]);
    } else {
      out.push_back(tail++);
    }
  }
  return out;
}

}  // namespace graphspace
