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

#include "json_io.h"

#include <charconv>
#include <cmath>

#include "graphspace/error.h"
#include "graphspace/labelling.h"

namespace graphspace::json_io {
namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

double number_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) fail(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<EdgeIndex> indices(const json& j) {
  if (!j.is_array()) fail("index list must be an array");
  std::vector<EdgeIndex> out;
  out.reserve(j.size());
  for (const json& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      fail("indices must be nonnegative integers");
    }
    out.push_back(v.get<EdgeIndex>());
  }
  return out;
}

std::vector<EdgeIndex> edge_indices(const json& j) {
  if (!j.is_array()) fail("edge list must be an array");
  std::vector<EdgeIndex> out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      fail("edges must be [u, v] integer pairs");
    }
    if (e[0].get<long long>() < 1 || e[1].get<long long>() < 1) {
      fail("vertices must be >= 1");
    }
    const Edge edge{e[0].get<Vertex>(), e[1].get<Vertex>()};
    validate_edge(edge);
    out.push_back(psi(edge));
  }
  return out;
}

// Decimal literals are taken at their written value, so every probability
// read from JSON is exact.
Probability probability_of(const json& j) {
  return Probability::of(to_rational(j));
}

}  // namespace

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json rational(const Rational& r) {
  return {{"exact", to_fraction_string(r)}, {"value", number(to_double(r))}};
}

Rational to_rational(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<std::uint64_t>())
                                  : Rational(j.get<std::int64_t>());
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail("non-finite number");
    return parse_rational(json(v).dump());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a number or a rational string");
}

json to_json(const GraphRepr& g) {
  return {{"kind", g.is_finite() ? "finite" : "cofinite"},
          {"support", std::vector<EdgeIndex>(g.support().begin(), g.support().end())}};
}

GraphRepr graph_from_json(const json& j) {
  const std::string kind = string_field(j, "kind");
  std::vector<EdgeIndex> s = j.contains("edges") ? edge_indices(j.at("edges"))
                                                 : indices(field(j, "support"));
  if (kind == "finite") return GraphRepr::finite(std::move(s));
  if (kind == "cofinite") return GraphRepr::cofinite(std::move(s));
  fail("graph kind must be \"finite\" or \"cofinite\", got \"" + kind + "\"");
}

json to_json(const CylinderSet& c) {
  return {{"forbidden", std::vector<EdgeIndex>(c.forbidden().begin(), c.forbidden().end())},
          {"required", std::vector<EdgeIndex>(c.required().begin(), c.required().end())}};
}

CylinderSet cylinder_from_json(const json& j) {
  return CylinderSet(j.contains("forbidden") ? indices(j.at("forbidden"))
                                             : std::vector<EdgeIndex>{},
                     j.contains("required") ? indices(j.at("required"))
                                            : std::vector<EdgeIndex>{});
}

json to_json(const DyadicValue& d) {
  std::string bits;
  bits.reserve(d.bits().size());
  for (auto b : d.bits()) bits.push_back(b ? '1' : '0');
  return {{"bits", bits}, {"tail", d.tail() == Tail::kOnes ? "ones" : "zeros"}};
}

DyadicValue dyadic_from_json(const json& j) {
  const std::string bits = string_field(j, "bits");
  const std::string tail = string_field(j, "tail");
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') fail("dyadic bits must be 0 or 1");
    v.push_back(c == '1');
  }
  if (tail != "zeros" && tail != "ones") {
    fail("dyadic tail must be \"zeros\" or \"ones\"");
  }
  return DyadicValue(std::move(v), tail == "ones" ? Tail::kOnes : Tail::kZeros);
}

json to_json(const WeightSequence& w) {
  if (w.kind() == WeightSequence::Kind::kGeometric) {
    return {{"kind", "geometric"}, {"base", w.tail_base()}};
  }
  return {{"kind", "table"},
          {"table", w.table()},
          {"tail_base", w.tail_base()},
          {"tail_scale", w.tail_scale()}};
}

WeightSequence weights_from_json(const json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "geometric") return WeightSequence::geometric(number_field(j, "base"));
  if (kind == "table") {
    const json& t = field(j, "table");
    if (!t.is_array()) fail("weight table must be an array");
    std::vector<double> table;
    for (const json& v : t) {
      if (!v.is_number()) fail("weights must be numbers");
      table.push_back(v.get<double>());
    }
    return WeightSequence::table_with_tail(std::move(table),
                                           number_field(j, "tail_base"),
                                           number_field(j, "tail_scale"));
  }
  fail("weight kind must be \"geometric\" or \"table\", got \"" + kind + "\"");
}

WeightSequence parse_weights(std::string_view text) {
  if (text.starts_with("geometric:")) {
    const std::string_view rest = text.substr(10);
    double base = 0.0;
    const auto r = std::from_chars(rest.data(), rest.data() + rest.size(), base);
    if (rest.empty() || r.ec != std::errc() || r.ptr != rest.data() + rest.size()) {
      fail("bad base in '" + std::string(text) + "'");
    }
    return WeightSequence::geometric(base);
  }
  return weights_from_json(parse(text));
}

json to_json(const ProbabilityAssignment& p) {
  const auto prob = [](const Probability& q) {
    return q.exact ? json(to_fraction_string(*q.exact)) : json(q.value);
  };
  if (p.kind() == ProbabilityAssignment::Kind::kConstant) {
    return {{"kind", "constant"}, {"p", prob(p.fallback())}};
  }
  json entries = json::array();
  for (const auto& e : p.entries()) entries.push_back(prob(e));
  return {{"kind", "table"}, {"entries", entries}, {"default", prob(p.fallback())}};
}

ProbabilityAssignment probability_from_json(const json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "constant") {
    return ProbabilityAssignment::constant(probability_of(field(j, "p")));
  }
  if (kind == "table") {
    const json& e = field(j, "entries");
    if (!e.is_array()) fail("probability entries must be an array");
    std::vector<Probability> entries;
    for (const json& v : e) entries.push_back(probability_of(v));
    return ProbabilityAssignment::table(std::move(entries),
                                        probability_of(field(j, "default")));
  }
  fail("probability kind must be \"constant\" or \"table\", got \"" + kind + "\"");
}

ProbabilityAssignment parse_constant_probability(std::string_view text) {
  return ProbabilityAssignment::constant(Probability::of(parse_rational(text)));
}

json to_json(const MeasureValue& m) {
  json out = {{"value", number(m.value)}, {"log_value", number(m.log_value)}};
  if (m.exact) out["exact"] = to_fraction_string(*m.exact);
  return out;
}

FiniteSupportMeasure finite_measure_from_json(const json& j) {
  const json& s = field(j, "support");
  const json& w = field(j, "weights");
  if (!s.is_array() || !w.is_array()) fail("support and weights must be arrays");
  std::vector<GraphRepr> support;
  for (const json& g : s) support.push_back(graph_from_json(g));
  std::vector<Rational> weights;
  for (const json& v : w) weights.push_back(to_rational(v));
  return FiniteSupportMeasure(std::move(support), std::move(weights));
}

json to_json(const SampleBatch& batch) {
  json rows = json::array();
  for (const auto& atom : batch.atoms) {
    std::string row(batch.depth, '0');
    for (std::size_t k = 1; k <= batch.depth; ++k) {
      if (atom.test(k)) row[k - 1] = '1';
    }
    rows.push_back(std::move(row));
  }
  return {{"depth", batch.depth},
          {"count", batch.count()},
          {"seed", batch.seed},
          {"atoms", rows}};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace graphspace::json_io
