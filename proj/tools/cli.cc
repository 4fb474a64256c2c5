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

#include "cli.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <Eigen/Core>
#include <boost/version.hpp>

#include "CLI11.hpp"
#include "graphspace/dyadic.h"
#include "graphspace/error.h"
#include "graphspace/expectations.h"
#include "graphspace/harmonic.h"
#include "graphspace/measures.h"
#include "graphspace/metrics.h"
#include "json_io.h"

namespace graphspace::cli {
namespace {

using json_io::json;

#define GRAPHSPACE_STR2(x) #x
#define GRAPHSPACE_STR(x) GRAPHSPACE_STR2(x)

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
}

// Inline JSON when the text opens an object or array, a file path otherwise.
json load_json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    return json_io::parse(text);
  }
  return json_io::parse(read_file(text));
}

std::string fnv1a_hex(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json file_entry(const std::string& path, std::span<const std::uint8_t> bytes) {
  return {{"path", path}, {"bytes", bytes.size()}, {"fnv1a64", fnv1a_hex(bytes)}};
}

json to_json(const MCEstimate& e) {
  return {{"mean", json_io::number(e.mean)},
          {"std_error", json_io::number(e.std_error)},
          {"count", e.count},
          {"requested", e.requested},
          {"undefined", e.undefined},
          {"non_finite", e.non_finite},
          {"depth", e.depth},
          {"seed", e.seed},
          {"bias_bound", e.bias_bound ? json_io::number(*e.bias_bound) : json()}};
}

struct Agreement {
  double delta = 0.0;
  double threshold = 0.0;
  bool agree = true;
};

// |mean - target| <= sigma * SE + truncation bias bound.
Agreement agreement(const MCEstimate& e, double target, double sigma) {
  Agreement a;
  a.delta = e.mean - target;
  a.threshold = sigma * e.std_error + e.bias_bound.value_or(0.0);
  a.agree = std::abs(a.delta) <= a.threshold;
  return a;
}

json interval_json(const IntervalIntegral& i) {
  json out = {{"value", json_io::number(i.value)},
              {"error_estimate", json_io::number(i.error_estimate)}};
  if (i.exact) out["exact"] = to_fraction_string(*i.exact);
  return out;
}

struct Options {
  std::string manifest_path;

  std::optional<std::string> p;
  std::optional<std::string> table;
  std::size_t depth = 64;
  std::size_t count = 200000;
  std::uint64_t seed = 0;
  std::string out_path;
  bool json_rows = false;

  std::string stat;
  std::size_t k = 1;
  std::optional<std::string> phi;
  std::optional<std::string> f;
  std::string mode = "both";
  double sigma = 4.0;
  std::optional<unsigned> n_exponent;
  bool exact = false;

  std::vector<EdgeIndex> forbidden;
  std::vector<EdgeIndex> required;
  std::string radius;
  std::optional<std::string> center;
  std::string kind = "open";
  std::optional<std::size_t> bracket_bits;

  std::optional<std::size_t> wht_depth;
  std::string in_path;
  bool inverse = false;

  std::string measure;
  std::string graphs;
  double tol = 1e-9;
};

class Runner {
 public:
  Runner(const std::vector<std::string>& args, std::ostream& out)
      : args_(args), out_(out) {}

  void set_command(std::string name, const CLI::App* app) {
    command_ = std::move(name);
    app_ = app;
  }

  // Prints the report with its manifest and writes the manifest file.
  void emit(json report) {
    json params = json::object();
    for (const CLI::Option* opt : app_->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto& r = opt->results();
      params[opt->get_name()] = r.size() == 1 ? json(r.front()) : json(r);
    }
    json manifest = {
        {"command", command_},
        {"argv", args_},
        {"parameters", params},
        {"seed", seed_ ? json(*seed_) : json()},
        {"versions",
         {{"graphspace", kVersion},
          {"compiler", __VERSION__},
          {"boost", BOOST_LIB_VERSION},
          {"eigen", GRAPHSPACE_STR(EIGEN_WORLD_VERSION) "." GRAPHSPACE_STR(
                        EIGEN_MAJOR_VERSION) "." GRAPHSPACE_STR(EIGEN_MINOR_VERSION)}}},
        {"outputs", outputs_}};
    if (!opts.manifest_path.empty()) {
      const std::string text = manifest.dump(2) + "\n";
      write_file(opts.manifest_path,
                 {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
    }
    report["manifest"] = std::move(manifest);
    out_ << report.dump(2) << "\n";
  }

  void add_output(json entry) { outputs_.push_back(std::move(entry)); }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  ProbabilityAssignment probability(bool required) const {
    if (opts.p && opts.table) {
      throw Error(ErrorCode::kInvalidArgument, "give either --p or --table");
    }
    if (opts.p) return json_io::parse_constant_probability(*opts.p);
    if (opts.table) return json_io::probability_from_json(load_json_arg(*opts.table));
    if (required) throw Error(ErrorCode::kInvalidArgument, "--p or --table is required");
    return ProbabilityAssignment::haar();
  }

  int sample();
  int expect();
  int transfer();
  int measure_cylinder();
  int measure_ball();
  int measure_atoms();
  int wht_cmd();
  int pd_check();

  Options opts;

 private:
  const std::vector<std::string>& args_;
  std::ostream& out_;
  std::string command_;
  const CLI::App* app_ = nullptr;
  json outputs_ = json::array();
  std::optional<std::uint64_t> seed_;
};

int Runner::sample() {
  const ProbabilityAssignment p = probability(true);
  set_seed(opts.seed);
  const SampleBatch batch = graphspace::sample(p, opts.depth, opts.seed, opts.count);
  const std::vector<std::uint8_t> frame = encode_batch(batch);
  std::size_t ones = 0;
  for (const auto& atom : batch.atoms) ones += atom.count();
  json report = {{"command", "sample"},
                 {"probability", json_io::to_json(p)},
                 {"depth", batch.depth},
                 {"count", batch.count()},
                 {"seed", batch.seed},
                 {"frame_bytes", frame.size()},
                 {"frame_fnv1a64", fnv1a_hex(frame)},
                 {"ones_fraction",
                  static_cast<double>(ones) /
                      (static_cast<double>(batch.depth) * batch.count())}};
  if (!opts.out_path.empty()) {
    write_file(opts.out_path, frame);
    add_output(file_entry(opts.out_path, frame));
    report["out"] = opts.out_path;
  }
  if (opts.json_rows) report["atoms"] = json_io::to_json(batch)["atoms"];
  emit(std::move(report));
  return kExitOk;
}

int Runner::expect() {
  if (opts.mode != "both" && opts.mode != "closed" && opts.mode != "mc") {
    throw Error(ErrorCode::kInvalidArgument, "--mode must be both, closed or mc");
  }
  const ProbabilityAssignment p = probability(true);
  StatisticParams params;
  params.k = opts.k;
  if (opts.phi) params.phi = json_io::parse_weights(*opts.phi);
  if (opts.f) params.f = TransferFunction::parse(*opts.f);
  const RegisteredStatistic stat = lookup_statistic(opts.stat, params, p, opts.depth);

  json report = {{"command", "expect"},
                 {"stat", stat.name},
                 {"probability", json_io::to_json(p)},
                 {"mode", opts.mode}};
  if (opts.stat == "psi_k") report["k"] = opts.k;
  if (params.phi) report["phi"] = json_io::to_json(*params.phi);
  if (params.f) report["f"] = params.f->name();

  if (stat.closed_form) {
    json cf = {{"value", json_io::number(*stat.closed_form)}};
    if (stat.closed_form_exact) cf["exact"] = to_fraction_string(*stat.closed_form_exact);
    report["closed_form"] = cf;
  } else {
    report["closed_form"] = nullptr;
    if (opts.mode == "closed") {
      throw Error(ErrorCode::kInvalidArgument,
                  "no closed form for " + stat.name + " under this measure");
    }
  }
  if (opts.stat == "psi_k" && p.kind() == ProbabilityAssignment::Kind::kConstant) {
    const double pv = p.fallback().value;
    const std::uint64_t terms = psi_k_series_terms(opts.k, pv, 1e-6);
    report["series"] = {{"terms", terms},
                        {"partial_sum", psi_k_series(opts.k, pv, terms)},
                        {"tolerance", 1e-6}};
    report["insufficiency_probability"] =
        insufficiency_probability(opts.k, pv, opts.depth);
  }
  if (opts.stat == "normx" && p.kind() == ProbabilityAssignment::Kind::kConstant) {
    const MultWeightSequence phi(*params.phi);
    const NormxExpectation nx = normx_expect(
        phi, p.fallback().value, opts.n_exponent.value_or(phi.norm_exponent()));
    report["normx"] = {{"moment", nx.definition_exponent},
                       {"definition_exponent", nx.definition_exponent},
                       {"requested_exponent", nx.requested_exponent},
                       {"hypothesis_definition", nx.hypothesis_definition},
                       {"hypothesis_requested", nx.hypothesis_requested},
                       {"readings_differ", nx.readings_differ},
                       {"hypothesis_unmet", nx.hypothesis_unmet}};
  }

  int code = kExitOk;
  if (opts.mode != "closed") {
    set_seed(opts.seed);
    MCEstimate mc = mc_expect(stat.fn, p, opts.depth, opts.seed, opts.count);
    mc.bias_bound = stat.bias_bound;
    report["mc"] = to_json(mc);
    if (opts.mode == "both" && stat.closed_form) {
      const Agreement a = agreement(mc, *stat.closed_form, opts.sigma);
      report["delta"] = json_io::number(a.delta);
      report["threshold"] = json_io::number(a.threshold);
      report["sigma"] = opts.sigma;
      report["agree_4sigma"] = a.agree;
      if (!a.agree) code = kExitCheckFailed;
    } else {
      report["agree_4sigma"] = nullptr;
    }
  }
  emit(std::move(report));
  return code;
}

int Runner::transfer() {
  const TransferFunction f = TransferFunction::parse(opts.f.value_or(""));
  const IntervalIntegral interval = interval_integral(f);
  json report = {{"command", "transfer"},
                 {"f", f.name()},
                 {"interval_side", interval_json(interval)}};
  int code = kExitOk;
  if (opts.exact) {
    const Rational graph = indicator_measure_exact(f);
    const bool equal = interval.exact && *interval.exact == graph;
    report["graph_side"] = json_io::rational(graph);
    report["difference"] =
        interval.exact ? json(to_fraction_string(graph - *interval.exact)) : json();
    report["exact_equal"] = equal;
    if (!equal) code = kExitCheckFailed;
  } else {
    set_seed(opts.seed);
    const ChangeOfVariables cov =
        change_of_variables(f, opts.depth, opts.seed, opts.count);
    const Agreement a = agreement(cov.graph_side, interval.value, opts.sigma);
    report["graph_side"] = to_json(cov.graph_side);
    report["difference"] = json_io::number(std::abs(a.delta));
    report["std_error"] = json_io::number(cov.graph_side.std_error);
    report["threshold"] = json_io::number(a.threshold);
    report["sigma"] = opts.sigma;
    report["agree_4sigma"] = a.agree;
    if (cov.graph_exact) report["graph_exact"] = json_io::rational(*cov.graph_exact);
    if (!a.agree) code = kExitCheckFailed;
  }
  emit(std::move(report));
  return code;
}

int Runner::measure_cylinder() {
  const ProbabilityAssignment p = probability(false);
  const CylinderSet c(opts.forbidden, opts.required);
  emit({{"command", "measure cylinder"},
        {"cylinder", json_io::to_json(c)},
        {"probability", json_io::to_json(p)},
        {"measure", json_io::to_json(cylinder_measure(c, p))}});
  return kExitOk;
}

int Runner::measure_ball() {
  if (opts.kind != "open" && opts.kind != "closed") {
    throw Error(ErrorCode::kInvalidArgument, "--kind must be open or closed");
  }
  const BallKind kind = opts.kind == "open" ? BallKind::kOpen : BallKind::kClosed;
  const GraphRepr center =
      opts.center ? json_io::graph_from_json(load_json_arg(*opts.center))
                  : GraphRepr::zero();
  json report = {{"command", "measure ball"},
                 {"center", json_io::to_json(center)},
                 {"kind", opts.kind}};
  const bool rational_radius = opts.radius.find('/') != std::string::npos;
  if (opts.bracket_bits) {
    const MeasureInterval m =
        rational_radius
            ? ball_measure_bracket(center, parse_rational(opts.radius), kind,
                                   *opts.bracket_bits)
            : ball_measure_bracket(center, DyadicValue::parse(opts.radius), kind,
                                   *opts.bracket_bits);
    report["radius"] = opts.radius;
    report["bracket_bits"] = *opts.bracket_bits;
    report["lower"] = json_io::rational(m.lower);
    report["upper"] = json_io::rational(m.upper);
  } else {
    DyadicValue radius;
    if (rational_radius) {
      bool truncated = false;
      radius = DyadicValue::from_rational(parse_rational(opts.radius),
                                          kMaxDyadicBits, &truncated);
      if (truncated) {
        throw Error(ErrorCode::kUnsupportedExactRadius,
                    "radius " + opts.radius +
                        " is not dyadic; pass --bracket-bits for an enclosure");
      }
    } else {
      radius = DyadicValue::parse(opts.radius);
    }
    const BallDecomposition d = ball_decomposition(center, radius, kind);
    const MeasureValue m = decomposition_measure(d, ProbabilityAssignment::haar());
    report["radius"] = json_io::to_json(radius);
    report["radius_exact"] = json_io::rational(radius.exact());
    report["measure"] = json_io::to_json(m);
    report["decomposition"] = {{"cylinders", d.cylinders.size()},
                               {"added_points", d.added_points.size()},
                               {"removed_points", d.removed_points.size()}};
  }
  emit(std::move(report));
  return kExitOk;
}

int Runner::measure_atoms() {
  const ProbabilityAssignment p = probability(false);
  const AtomMassProfile prof = atom_mass_profile(p, opts.depth);
  std::string prefix(opts.depth, '0');
  for (std::size_t k = 1; k <= opts.depth; ++k) {
    if (prof.maximal_atom.test(k)) prefix[k - 1] = '1';
  }
  json report = {{"command", "measure atoms"},
                 {"probability", json_io::to_json(p)},
                 {"depth", opts.depth},
                 {"pi_final", json_io::to_json(prof.final_value)},
                 {"maximal_atom_prefix", prefix}};
  if (opts.depth <= 256) {
    json pi = json::array();
    for (double v : prof.pi) pi.push_back(json_io::number(v));
    report["pi"] = pi;
  }
  emit(std::move(report));
  return kExitOk;
}

int Runner::wht_cmd() {
  const std::string bytes_text = read_file(opts.in_path);
  const DecodedTable table = decode_table(
      {reinterpret_cast<const std::uint8_t*>(bytes_text.data()), bytes_text.size()},
      opts.wht_depth);
  std::vector<double> result;
  if (opts.inverse) {
    result = inverse_wht(WalshSpectrum{table.depth, table.values});
  } else {
    result = wht(table.values, table.depth).coeffs;
  }
  double energy_in = 0.0;
  double energy_out = 0.0;
  for (double v : table.values) energy_in += v * v;
  for (double v : result) energy_out += v * v;
  json nonzero = json::array();
  std::size_t nonzero_count = 0;
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (std::abs(result[i]) > 1e-12) {
      if (++nonzero_count <= 64) {
        nonzero.push_back({{"index", i}, {"value", json_io::number(result[i])}});
      }
    }
  }
  json report = {{"command", "wht"},
                 {"depth", table.depth},
                 {"inverse", opts.inverse},
                 {"input_had_header", table.had_header},
                 {"nonzero_count", nonzero_count},
                 {"nonzero", nonzero},
                 {"energy_in", json_io::number(energy_in)},
                 {"energy_out", json_io::number(energy_out)}};
  if (!opts.out_path.empty()) {
    const std::vector<std::uint8_t> frame = encode_table(table.depth, result);
    write_file(opts.out_path, frame);
    add_output(file_entry(opts.out_path, frame));
    report["out"] = opts.out_path;
  }
  emit(std::move(report));
  return kExitOk;
}

int Runner::pd_check() {
  const PositiveDefiniteFunction f =
      bochner_synthesize(json_io::finite_measure_from_json(load_json_arg(opts.measure)));
  const json graphs_json = load_json_arg(opts.graphs);
  if (!graphs_json.is_array()) {
    throw Error(ErrorCode::kParseError, "--graphs must hold a JSON array");
  }
  std::vector<GraphRepr> graphs;
  for (const json& g : graphs_json) graphs.push_back(json_io::graph_from_json(g));
  const GramReport gram =
      gram_check([&f](const GraphRepr& g) { return f(g); }, graphs, opts.tol);
  double max_abs = 0.0;
  for (const auto& g : graphs) max_abs = std::max(max_abs, std::abs(f(g)));
  emit({{"command", "pd-check"},
        {"size", gram.size},
        {"min_eigenvalue", json_io::number(gram.min_eigenvalue)},
        {"psd", gram.psd},
        {"tolerance", json_io::number(gram.tolerance)},
        {"f_zero", json_io::rational(f.exact(GraphRepr::zero()))},
        {"max_abs_f", json_io::number(max_abs)}});
  return gram.psd ? kExitOk : kExitCheckFailed;
}

void add_probability_options(CLI::App* app, Options& o) {
  app->add_option("--p", o.p, "Constant edge probability (rational or decimal)");
  app->add_option("--table", o.table,
                  "Probability table as inline JSON or a JSON file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Runner runner(args, out);
  Options& o = runner.opts;
  CLI::App app{"Measures, expectations and harmonic analysis on graph space",
               "graphspace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* sample = app.add_subcommand("sample", "Draw seeded depth-d truncations");
  add_probability_options(sample, o);
  sample->add_option("--depth", o.depth)->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", o.count)->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed);
  sample->add_option("--out", o.out_path, "Binary frame output file");
  sample->add_flag("--json-rows", o.json_rows, "Include the rows in the report");

  auto* expect = app.add_subcommand("expect", "Closed form against Monte Carlo");
  expect->add_option("--stat", o.stat, "psi_k, norm1, norminf, normx, heart2, f_heart2")
      ->required();
  expect->add_option("--k", o.k)->check(CLI::PositiveNumber);
  add_probability_options(expect, o);
  expect->add_option("--phi", o.phi, "Weights: geometric:a or JSON");
  expect->add_option("--f", o.f, "Transfer function for f_heart2");
  expect->add_option("--depth", o.depth)->check(CLI::PositiveNumber);
  expect->add_option("--count", o.count)->check(CLI::PositiveNumber);
  expect->add_option("--seed", o.seed);
  expect->add_option("--mode", o.mode, "both, closed or mc");
  expect->add_option("--sigma", o.sigma)->check(CLI::PositiveNumber);
  expect->add_option("--n-exponent", o.n_exponent)->check(CLI::PositiveNumber);

  auto* transfer = app.add_subcommand("transfer", "Both sides of the dyadic change of variables");
  transfer->add_option("--f", o.f, "identity, square, poly:..., indicator:a:b, neg-floor-log2")
      ->required();
  transfer->add_option("--depth", o.depth)->check(CLI::PositiveNumber);
  transfer->add_option("--count", o.count)->check(CLI::PositiveNumber);
  transfer->add_option("--seed", o.seed);
  transfer->add_option("--sigma", o.sigma)->check(CLI::PositiveNumber);
  transfer->add_flag("--exact", o.exact, "Exact cylinder path for dyadic indicators");

  auto* measure = app.add_subcommand("measure", "Cylinder, ball and atom queries");
  measure->require_subcommand(1);
  auto* cylinder = measure->add_subcommand("cylinder", "mu_P(E(I0, I1))");
  cylinder->add_option("--forbidden", o.forbidden)->delimiter(',');
  cylinder->add_option("--required", o.required)->delimiter(',');
  add_probability_options(cylinder, o);
  auto* ball = measure->add_subcommand("ball", "Haar measure of a dyadic-norm ball");
  ball->add_option("--radius", o.radius, "Binary \"0.011\" (\"~\" for a ones tail) or a/b")
      ->required();
  ball->add_option("--center", o.center, "Graph as inline JSON or a JSON file");
  ball->add_option("--kind", o.kind, "open or closed");
  ball->add_option("--bracket-bits", o.bracket_bits)->check(CLI::PositiveNumber);
  auto* atoms = measure->add_subcommand("atoms", "Maximal atom mass profile");
  add_probability_options(atoms, o);
  atoms->add_option("--depth", o.depth)->required()->check(CLI::PositiveNumber);

  auto* wht = app.add_subcommand("wht", "Walsh-Hadamard transform of a table file");
  wht->add_option("--depth", o.wht_depth)->check(CLI::Range(0, 24));
  wht->add_option("--in", o.in_path)->required();
  wht->add_option("--out", o.out_path);
  wht->add_flag("--inverse", o.inverse);

  auto* pd = app.add_subcommand("pd-check", "Gram matrix positivity of a character mixture");
  pd->add_option("--measure", o.measure, "Finite-support measure JSON")->required();
  pd->add_option("--graphs", o.graphs, "JSON array of graphs")->required();
  pd->add_option("--tol", o.tol)->check(CLI::NonNegativeNumber);

  for (CLI::App* sub : {sample, expect, transfer, cylinder, ball, atoms, wht, pd}) {
    sub->add_option("--manifest", o.manifest_path, "Also write the run manifest here");
  }

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("graphspace");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sample->parsed()) {
      runner.set_command("sample", sample);
      return runner.sample();
    }
    if (expect->parsed()) {
      runner.set_command("expect", expect);
      return runner.expect();
    }
    if (transfer->parsed()) {
      runner.set_command("transfer", transfer);
      return runner.transfer();
    }
    if (cylinder->parsed()) {
      runner.set_command("measure cylinder", cylinder);
      return runner.measure_cylinder();
    }
    if (ball->parsed()) {
      runner.set_command("measure ball", ball);
      return runner.measure_ball();
    }
    if (atoms->parsed()) {
      runner.set_command("measure atoms", atoms);
      return runner.measure_atoms();
    }
    if (wht->parsed()) {
      runner.set_command("wht", wht);
      return runner.wht_cmd();
    }
    if (pd->parsed()) {
      runner.set_command("pd-check", pd);
      return runner.pd_check();
    }
  } catch (const Error& e) {
    out << json{{"error", std::string(error_code_name(e.code()))},
                {"message", e.what()}}
               .dump(2)
        << "\n";
    err << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace graphspace::cli
