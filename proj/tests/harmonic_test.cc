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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "graphspace/error.h"
#include "graphspace/metrics.h"
#include "oracles.h"

namespace graphspace {
namespace {

GraphRepr fin(std::vector<EdgeIndex> s) { return GraphRepr::finite(std::move(s)); }
GraphRepr cof(std::vector<EdgeIndex> s) { return GraphRepr::cofinite(std::move(s)); }

template <typename Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

std::vector<double> random_table(oracle::Gen& gen, std::size_t n) {
  std::vector<double> f(std::size_t{1} << n);
  for (double& v : f) v = 2.0 * gen.real01() - 1.0;
  return f;
}

// chi_S on depth-n atoms, by atom code.
std::vector<double> character_table(std::uint64_t s, std::size_t n) {
  std::vector<double> f(std::size_t{1} << n);
  for (std::size_t g = 0; g < f.size(); ++g) f[g] = (__builtin_popcountll(s & g) & 1) ? -1.0 : 1.0;
  return f;
}

FiniteSupportMeasure random_measure(oracle::Gen& gen, std::size_t max_support,
                                    EdgeIndex max_index) {
  std::set<std::vector<EdgeIndex>> distinct;
  const std::size_t size = gen.uniform(1, max_support);
  while (distinct.size() < size) distinct.insert(gen.subset(max_index));
  std::vector<GraphRepr> support;
  for (const auto& s : distinct) support.push_back(fin(s));
  std::vector<BigInt> raw;
  BigInt total = 0;
  for (std::size_t i = 0; i < size; ++i) {
    raw.push_back(gen.uniform(0, 1000));
    total += raw.back();
  }
  if (total == 0) {
    raw[0] = 1;
    total = 1;
  }
  std::vector<Rational> weights;
  for (const BigInt& r : raw) weights.push_back(Rational(r, total));
  return FiniteSupportMeasure(std::move(support), std::move(weights));
}

TEST_CASE("walsh_eval examples") {
  CHECK(walsh_eval(GraphRepr::zero(), cof({4})) == 1);
  CHECK(walsh_eval(fin({1}), fin({1, 3})) == -1);
  CHECK(walsh_eval(fin({1, 2}), cof({1})) == -1);
  CHECK(walsh_eval(fin({1, 2}), GraphRepr::complete()) == 1);
  CHECK(error_of([] { walsh_eval(cof({1}), fin({1})); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { WalshCharacter(cof({})); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("character and duality laws") {
  oracle::Gen gen(61);
  for (int trial = 0; trial < 500; ++trial) {
    const GraphRepr e = gen.finite_graph(40);
    const GraphRepr f = gen.finite_graph(40);
    const GraphRepr g = gen.graph(50);
    const GraphRepr h = gen.graph(50);
    CHECK(walsh_eval(e, sym_diff(g, h)) == walsh_eval(e, g) * walsh_eval(e, h));
    CHECK(walsh_eval(sym_diff(e, f), g) == walsh_eval(e, g) * walsh_eval(f, g));
    int parity = 1;
    for (EdgeIndex n : e.support()) parity *= oracle::member(g, n) ? -1 : 1;
    CHECK(walsh_eval(e, g) == parity);
    const WalshCharacter ce(e);
    const WalshCharacter cf(f);
    CHECK((ce * cf).index() == sym_diff(e, f));
    CHECK((ce * cf)(g) == ce(g) * cf(g));
    CHECK(dual_roundtrip(ce) == e);
  }
}

TEST_CASE("dual round trip examples") {
  CHECK(dual_roundtrip(WalshCharacter()) == GraphRepr::zero());
  CHECK(dual_roundtrip(WalshCharacter(fin({1, 3}))) == fin({1, 3}));
  CHECK(dual_roundtrip(WalshCharacter(fin({1, 2})) * WalshCharacter(fin({2, 3}))) == fin({1, 3}));
}

TEST_CASE("transform examples") {
  const WalshSpectrum one = wht(std::vector<double>(8, 1.0), 3);
  CHECK(one.coeffs[0] == 1.0);
  for (std::size_t s = 1; s < 8; ++s) CHECK(one.coeffs[s] == 0.0);
  const WalshSpectrum chi = wht(character_table(0b011, 3), 3);
  for (std::size_t s = 0; s < 8; ++s) CHECK(chi.coeffs[s] == (s == 0b011 ? 1.0 : 0.0));
  CHECK(error_of([] { wht(std::vector<double>(7), 3); }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { wht(std::vector<double>(2), 25); }) == ErrorCode::kResourceLimit);
}

TEST_CASE("transform matches the quadratic definition") {
  oracle::Gen gen(62);
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto f = random_table(gen, n);
    const auto fast = wht(f, n).coeffs;
    const auto slow = oracle::naive_wht(f, n);
    for (std::size_t s = 0; s < f.size(); ++s) CHECK(std::abs(fast[s] - slow[s]) <= 1e-14);
  }
}

TEST_CASE("inverse transform and Parseval at depth 10") {
  oracle::Gen gen(63);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_table(gen, 10);
    const WalshSpectrum spec = wht(f, 10);
    const auto back = inverse_wht(spec);
    double err = 0.0;
    double energy_f = 0.0;
    double energy_c = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      err = std::max(err, std::abs(back[i] - f[i]));
      energy_f += f[i] * f[i];
      energy_c += spec.coeffs[i] * spec.coeffs[i];
    }
    CHECK(err <= 1e-12);
    CHECK(std::abs(energy_c - energy_f / 1024.0) <= 1e-12);
  }
}

TEST_CASE("integer transform: orthonormality and exact Parseval") {
  for (std::size_t n : {1u, 4u, 8u}) {
    const std::size_t size = std::size_t{1} << n;
    // Row E of the transform of chi_F is sum_G chi_E chi_F = 2^n delta_EF.
    for (std::size_t f = 0; f < size; ++f) {
      std::vector<std::int64_t> chi(size);
      for (std::size_t g = 0; g < size; ++g) chi[g] = (__builtin_popcountll(f & g) & 1) ? -1 : 1;
      const auto row = wht_integer(chi, n);
      for (std::size_t e = 0; e < size; ++e) {
        REQUIRE(row[e] == (e == f ? static_cast<std::int64_t>(size) : 0));
      }
    }
  }
  oracle::Gen gen(64);
  std::vector<std::int64_t> f(1024);
  for (auto& v : f) v = static_cast<std::int64_t>(gen.uniform(0, 2000)) - 1000;
  const auto spec = wht_integer(f, 10);
  BigInt lhs = 0;
  BigInt rhs = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    lhs += BigInt(spec[i]) * spec[i];
    rhs += BigInt(f[i]) * f[i];
  }
  CHECK(lhs == rhs * 1024);
}

TEST_CASE("convolution agrees with the direct sum") {
  oracle::Gen gen(65);
  const std::size_t n = 6;
  const auto f = random_table(gen, n);
  const auto g = random_table(gen, n);
  const auto h = random_table(gen, n);
  const auto fg = convolve(f, g, n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    double direct = 0.0;
    for (std::size_t y = 0; y < f.size(); ++y) direct += f[y] * g[x ^ y];
    CHECK(std::abs(fg[x] - direct / f.size()) <= 1e-14);
  }
  const auto gf = convolve(g, f, n);
  const auto left = convolve(fg, h, n);
  const auto right = convolve(f, convolve(g, h, n), n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    CHECK(std::abs(fg[x] - gf[x]) <= 1e-14);
    CHECK(std::abs(left[x] - right[x]) <= 1e-14);
  }
}

TEST_CASE("finite support measures are validated") {
  CHECK(error_of([] { FiniteSupportMeasure({fin({1})}, {Rational(1, 2)}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_of([] {
          FiniteSupportMeasure({fin({1}), fin({1})}, {Rational(1, 2), Rational(1, 2)});
        }) == ErrorCode::kInvalidArgument);
  CHECK(error_of([] { FiniteSupportMeasure({cof({1})}, {Rational(1)}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_of([] {
          FiniteSupportMeasure({fin({1}), fin({2})}, {Rational(3, 2), Rational(-1, 2)});
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("Bochner synthesis examples") {
  const auto trivial = bochner_synthesize(FiniteSupportMeasure({GraphRepr::zero()}, {Rational(1)}));
  const auto single = bochner_synthesize(FiniteSupportMeasure({fin({2, 5})}, {Rational(1)}));
  const auto uniform = bochner_synthesize(
      FiniteSupportMeasure({GraphRepr::zero(), fin({1})}, {Rational(1, 2), Rational(1, 2)}));
  oracle::Gen gen(66);
  for (int trial = 0; trial < 100; ++trial) {
    const GraphRepr g = gen.graph(8);
    CHECK(trivial.exact(g) == 1);
    CHECK(single(g) == walsh_eval(fin({2, 5}), g));
    CHECK(uniform.exact(g) == (oracle::member(g, 1) ? 0 : 1));
  }
}

TEST_CASE("Bochner soundness on random mixtures") {
  oracle::Gen gen(67);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = bochner_synthesize(random_measure(gen, 8, 12));
    CHECK(f.exact(GraphRepr::zero()) == 1);
    std::vector<GraphRepr> graphs;
    for (int i = 0; i < 50; ++i) graphs.push_back(gen.graph(14));
    for (const auto& g : graphs) CHECK(std::abs(f(g)) <= 1.0 + 1e-12);
    const GramReport r = gram_check([&](const GraphRepr& g) { return f(g); }, graphs, 1e-9);
    CHECK(r.psd);
    CHECK(r.size == 50);
    CHECK(r.min_eigenvalue >= -1e-9);
  }
}

TEST_CASE("Gram check examples") {
  std::vector<GraphRepr> five = {GraphRepr::zero(), fin({1}), cof({2}), fin({3, 4}), cof({})};
  const GramReport ones = gram_check([](const GraphRepr&) { return 1.0; }, five);
  CHECK(std::abs(ones.min_eigenvalue) <= 1e-12);
  CHECK(ones.psd);
  const GramReport chi = gram_check([](const GraphRepr& g) { return double(walsh_eval(fin({2, 3}), g)); }, five);
  CHECK(chi.psd);

  const auto spike = [](const GraphRepr& g) { return g == GraphRepr::zero() ? 1.0 : -1.0; };
  std::vector<GraphRepr> two = {GraphRepr::zero(), fin({1})};
  CHECK(gram_check(spike, two).psd);
  two.push_back(fin({2}));
  const GramReport bad = gram_check(spike, two);
  CHECK_FALSE(bad.psd);
  CHECK(bad.min_eigenvalue == doctest::Approx(-1.0));
  const auto ev = oracle::jacobi_eigenvalues({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[2] == doctest::Approx(2.0));

  CHECK(error_of([] { gram_check([](const GraphRepr&) { return 1.0; }, {}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(error_of([&] {
          gram_check([](const GraphRepr&) { return std::numeric_limits<double>::quiet_NaN(); },
                     five);
        }) == ErrorCode::kInvalidFunction);
}

TEST_CASE("Gram eigenvalues agree with a Jacobi oracle") {
  oracle::Gen gen(68);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<GraphRepr> graphs;
    for (int i = 0; i < 12; ++i) graphs.push_back(gen.graph(6));
    std::vector<double> table(64);
    for (double& v : table) v = 2.0 * gen.real01() - 1.0;
    const auto f = [&](const GraphRepr& g) { return table[oracle::code_of(g, 6)]; };
    std::vector<std::vector<double>> m(12, std::vector<double>(12));
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) m[i][j] = f(sym_diff(graphs[i], graphs[j]));
    }
    const double expected = oracle::jacobi_eigenvalues(m)[0];
    const GramReport r = gram_check(f, graphs, 1e-9);
    CHECK(r.min_eigenvalue == doctest::Approx(expected).epsilon(1e-9));
    CHECK(r.psd == (expected >= -1e-9));
  }
}

TEST_CASE("finite-depth Bochner recovery") {
  const FiniteSupportMeasure mu({fin({1}), fin({2, 3}), GraphRepr::zero()},
                                {Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  const auto f = bochner_synthesize(mu);
  std::vector<double> table(16);
  for (std::uint64_t c = 0; c < 16; ++c) table[c] = f(TruncatedAtom::from_code(4, c).to_finite_graph());
  const BochnerRecovery r = bochner_recover(table, 4);
  CHECK(r.nonnegative);
  CHECK(r.spectrum.coeffs[0b0001] == doctest::Approx(0.25));
  CHECK(r.spectrum.coeffs[0b0110] == doctest::Approx(0.5));
  CHECK(r.spectrum.coeffs[0] == doctest::Approx(0.25));
  std::vector<double> spike(16, -1.0);
  spike[0] = 1.0;
  CHECK_FALSE(bochner_recover(spike, 4).nonnegative);
}

TEST_CASE("Walsh characters are Rademacher products through the dyadic map") {
  oracle::Gen gen(69);
  for (int trial = 0; trial < 300; ++trial) {
    // Denominator 3 * 2^32 keeps x off the dyadic rationals.
    const Rational x(BigInt(3) * gen.uniform(0, (std::uint64_t{1} << 32) - 1) + gen.uniform(1, 2),
                     BigInt(3) << 32);
    const Preimage pre = heart2_inv(x, 32);
    CHECK(pre.residual);
    const GraphRepr e = GraphRepr::finite(gen.sparse_subset(32, 6));
    int product = 1;
    for (EdgeIndex k : e.support()) product *= rademacher(x, k);
    CHECK(walsh_eval(e, pre.graph) == product);
    CHECK(walsh_function(e, x) == product);
    for (EdgeIndex k = 1; k <= 32; ++k) {
      CHECK(rademacher(x, k) == (oracle::member(pre.graph, k) ? -1 : 1));
      CHECK(rademacher(to_double(x), k) == rademacher(x, k));
    }
  }
}

TEST_CASE("spectrum files") {
  std::vector<double> v = {1.5, -2.0, 0.25, 8.0};
  const auto bytes = encode_table(2, v);
  CHECK(bytes.size() == 8 + 4 * 8);
  const DecodedTable t = decode_table(bytes, std::nullopt);
  CHECK(t.depth == 2);
  CHECK(t.had_header);
  CHECK(t.values == v);
  CHECK(decode_table(bytes, 2).values == v);
  const std::vector<std::uint8_t> bare(bytes.begin() + 8, bytes.end());
  const DecodedTable b = decode_table(bare, 2);
  CHECK_FALSE(b.had_header);
  CHECK(b.values == v);
  CHECK(error_of([&] { decode_table(bare, std::nullopt); }) == ErrorCode::kParseError);
  CHECK(error_of([&] { decode_table(bytes, 3); }) == ErrorCode::kParseError);
  CHECK(error_of([&] { decode_table(std::span(bytes).first(20), std::nullopt); }) ==
        ErrorCode::kParseError);
}

}  // namespace
}  // namespace graphspace
