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

// Brute-force oracles and random generators shared by the tests. Nothing
// here calls into the library's algorithms; the oracles work from the
// definitions on explicit bit vectors so they can check the fast paths.

#ifndef GRAPHSPACE_TESTS_ORACLES_H_
#define GRAPHSPACE_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "graphspace/graph.h"
#include "graphspace/labelling.h"
#include "graphspace/rational.h"

namespace graphspace::oracle {

// Pairs {u, v} listed by increasing v, then increasing u.
inline std::vector<Edge> colex_pairs(std::size_t count) {
  std::vector<Edge> out;
  for (Vertex v = 2; out.size() < count; ++v) {
    for (Vertex u = 1; u < v && out.size() < count; ++u) out.push_back({u, v});
  }
  return out;
}

// Membership of index n (1-based) in a finite or co-finite graph, read off
// the support without the library's lookup.
inline bool member(const GraphRepr& g, EdgeIndex n) {
  bool listed = false;
  for (EdgeIndex s : g.support()) listed = listed || s == n;
  return g.is_finite() ? listed : !listed;
}

// Indices 1..d of a graph as a code.
inline std::uint64_t code_of(const GraphRepr& g, std::size_t d) {
  std::uint64_t c = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    if (member(g, k)) c |= std::uint64_t{1} << (k - 1);
  }
  return c;
}

inline bool bit(std::uint64_t code, std::size_t k) { return (code >> (k - 1)) & 1U; }

// Exact graphs whose depth-d prefix is `code`, with the tails a ball test
// can tell apart: all zeros, all ones, and mixed.
inline std::vector<GraphRepr> probe_graphs(std::uint64_t code, std::size_t d) {
  std::vector<EdgeIndex> present;
  std::vector<EdgeIndex> absent;
  for (std::size_t k = 1; k <= d; ++k) (bit(code, k) ? present : absent).push_back(k);
  auto with = [](std::vector<EdgeIndex> v, std::initializer_list<EdgeIndex> extra) {
    v.insert(v.end(), extra);
    return v;
  };
  return {GraphRepr::finite(present),
          GraphRepr::cofinite(absent),
          GraphRepr::finite(with(present, {d + 1})),
          GraphRepr::finite(with(present, {d + 2, d + 5})),
          GraphRepr::cofinite(with(absent, {d + 1})),
          GraphRepr::cofinite(with(absent, {d + 3}))};
}

// Codes of the depth-d atoms inside E(I0, I1).
inline std::set<std::uint64_t> cylinder_atoms(const std::vector<EdgeIndex>& forbidden,
                                              const std::vector<EdgeIndex>& required,
                                              std::size_t d) {
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << d); ++c) {
    bool ok = true;
    for (EdgeIndex i : forbidden) ok = ok && !bit(c, i);
    for (EdgeIndex i : required) ok = ok && bit(c, i);
    if (ok) out.insert(c);
  }
  return out;
}

inline std::set<std::uint64_t> cylinder_atoms(const CylinderSet& a, std::size_t d) {
  return cylinder_atoms({a.forbidden().begin(), a.forbidden().end()},
                        {a.required().begin(), a.required().end()}, d);
}

// mu_P of one depth-d atom as an exact product; probs[k-1] = P(k).
inline Rational atom_weight(std::uint64_t code, const std::vector<Rational>& probs) {
  Rational w = 1;
  for (std::size_t k = 1; k <= probs.size(); ++k) {
    w *= bit(code, k) ? probs[k - 1] : Rational(1) - probs[k - 1];
  }
  return w;
}

// sum_{n in G} 2^{-n} from the definition: a finite sum, or 1 minus the
// absent terms.
inline Rational dyadic_norm(const GraphRepr& g) {
  Rational s = 0;
  for (EdgeIndex n : g.support()) s += Rational(1, BigInt(1) << n);
  return g.is_finite() ? s : Rational(1) - s;
}

// coeffs[S] = 2^{-n} sum_G f(G) (-1)^{|S & G|}, quadratic time.
inline std::vector<double> naive_wht(const std::vector<double>& f, std::size_t n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> out(size, 0.0);
  for (std::size_t s = 0; s < size; ++s) {
    double acc = 0.0;
    for (std::size_t g = 0; g < size; ++g) {
      acc += (__builtin_popcountll(s & g) & 1) ? -f[g] : f[g];
    }
    out[s] = acc / static_cast<double>(size);
  }
  return out;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Hand-rolled generators over a seeded engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  double real01() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  // A random subset of {1..max_index}, each index kept with chance 1/2.
  std::vector<EdgeIndex> subset(EdgeIndex max_index) {
    std::vector<EdgeIndex> out;
    for (EdgeIndex i = 1; i <= max_index; ++i) {
      if (coin()) out.push_back(i);
    }
    return out;
  }

  std::vector<EdgeIndex> sparse_subset(EdgeIndex max_index, std::size_t max_size) {
    std::set<EdgeIndex> s;
    const std::size_t size = uniform(0, max_size);
    while (s.size() < size) s.insert(uniform(1, max_index));
    return {s.begin(), s.end()};
  }

  GraphRepr graph(EdgeIndex max_index) {
    auto s = subset(max_index);
    return coin() ? GraphRepr::finite(std::move(s)) : GraphRepr::cofinite(std::move(s));
  }

  GraphRepr finite_graph(EdgeIndex max_index) {
    return GraphRepr::finite(subset(max_index));
  }

  // Disjoint (I0, I1) inside {1..max_index}; each index forbidden, required
  // or free with equal chance.
  std::pair<std::vector<EdgeIndex>, std::vector<EdgeIndex>> cylinder_sets(
      EdgeIndex max_index) {
    std::vector<EdgeIndex> i0;
    std::vector<EdgeIndex> i1;
    for (EdgeIndex i = 1; i <= max_index; ++i) {
      switch (uniform(0, 2)) {
        case 0: i0.push_back(i); break;
        case 1: i1.push_back(i); break;
        default: break;
      }
    }
    return {i0, i1};
  }

  CylinderSet cylinder(EdgeIndex max_index) {
    auto [i0, i1] = cylinder_sets(max_index);
    return CylinderSet(std::move(i0), std::move(i1));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace graphspace::oracle

#endif  // GRAPHSPACE_TESTS_ORACLES_H_
