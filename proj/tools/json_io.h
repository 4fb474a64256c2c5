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

// JSON forms of the library types. Malformed input throws kParseError.
//
//   graph        {"kind": "finite"|"cofinite", "support": [n, ...]}
//                or {"kind": ..., "edges": [[u, v], ...]}
//   cylinder     {"forbidden": [n, ...], "required": [n, ...]}
//   dyadic       {"bits": "0101", "tail": "zeros"|"ones"}
//   weights      {"kind": "geometric", "base": a}
//                {"kind": "table", "table": [w, ...], "tail_base": a,
//                 "tail_scale": c}
//   probability  {"kind": "constant", "p": x}
//                {"kind": "table", "entries": [x, ...], "default": x}
//                with each x a number or a rational string such as "3/10"
//   measure      {"support": [graph, ...], "weights": [x, ...]}

#ifndef GRAPHSPACE_TOOLS_JSON_IO_H_
#define GRAPHSPACE_TOOLS_JSON_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "graphspace/dyadic.h"
#include "graphspace/graph.h"
#include "graphspace/harmonic.h"
#include "graphspace/measures.h"
#include "graphspace/metrics.h"
#include "graphspace/rational.h"

namespace graphspace::json_io {

using nlohmann::json;

// A finite double, or null for inf and NaN.
json number(double v);

// {"exact": "num/den", "value": double}.
json rational(const Rational& r);

// Reads a number or a rational string. Numbers are read from their shortest
// decimal form, so 0.1 becomes 1/10.
Rational to_rational(const json& j);

json to_json(const GraphRepr& g);
GraphRepr graph_from_json(const json& j);

json to_json(const CylinderSet& c);
CylinderSet cylinder_from_json(const json& j);

json to_json(const DyadicValue& d);
DyadicValue dyadic_from_json(const json& j);

json to_json(const WeightSequence& w);
WeightSequence weights_from_json(const json& j);
// "geometric:a" or a JSON object.
WeightSequence parse_weights(std::string_view text);

json to_json(const ProbabilityAssignment& p);
ProbabilityAssignment probability_from_json(const json& j);
// A rational or decimal literal as a constant assignment.
ProbabilityAssignment parse_constant_probability(std::string_view text);

json to_json(const MeasureValue& m);

FiniteSupportMeasure finite_measure_from_json(const json& j);

// Small batches only: one "0101..." string per atom, index 1 first.
json to_json(const SampleBatch& batch);

// Parses JSON text; throws kParseError with the parser's message.
json parse(std::string_view text);

}  // namespace graphspace::json_io

#endif  // GRAPHSPACE_TOOLS_JSON_IO_H_
