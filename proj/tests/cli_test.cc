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
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "graphspace/harmonic.h"
#include "graphspace/measures.h"
#include "json.hpp"
#include "oracles.h"

namespace graphspace {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  json report;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && (r.out.front() == '{' || r.out.front() == '[')) {
    r.report = json::parse(r.out);
  }
  return r;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("graphspace_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spill(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

TEST_CASE("sample writes a seeded frame") {
  TempDir dir;
  const Result r = run({"sample", "--p", "0.5", "--depth", "16", "--count", "1000", "--seed",
                        "7", "--out", dir.file("a.bin")});
  REQUIRE(r.code == 0);
  CHECK(r.report["count"] == 1000);
  CHECK(r.report["depth"] == 16);
  const std::string bytes = slurp(dir.file("a.bin"));
  const SampleBatch batch = decode_batch(
      {reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()});
  CHECK(batch.count() == 1000);
  CHECK(batch.depth == 16);
  CHECK(batch.seed == 7);
  CHECK(r.report["manifest"]["outputs"].size() == 1);

  const Result again = run({"sample", "--p", "0.5", "--depth", "16", "--count", "1000",
                            "--seed", "7", "--out", dir.file("b.bin")});
  CHECK(slurp(dir.file("b.bin")) == bytes);
  CHECK(again.report["frame_fnv1a64"] == r.report["frame_fnv1a64"]);
}

TEST_CASE("sample with p = 1 gives all-ones rows") {
  const Result r = run({"sample", "--p", "1", "--depth", "8", "--count", "2", "--seed", "0",
                        "--json-rows"});
  REQUIRE(r.code == 0);
  CHECK(r.report["atoms"] == json::array({"11111111", "11111111"}));
  CHECK(r.report["ones_fraction"] == 1.0);
}

TEST_CASE("sample flag errors are usage errors") {
  CHECK(run({"sample", "--p", "0.5", "--count", "10"}).code == 2);
  CHECK(run({"sample", "--p", "1.5", "--depth", "4", "--count", "10"}).code == 2);
  CHECK(run({"sample", "--depth", "4", "--count", "10"}).code == 2);
  CHECK(run({"sample", "--p", "0.5", "--depth", "4", "--count", "10", "--bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("expect psi_k against k/p") {
  const Result r = run({"expect", "--stat", "psi_k", "--k", "1", "--p", "0.5", "--count",
                        "200000", "--seed", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.report["closed_form"]["value"] == 2.0);
  CHECK(r.report["closed_form"]["exact"] == "2");
  CHECK(r.report["agree_4sigma"] == true);
  CHECK(std::abs(r.report["series"]["partial_sum"].get<double>() - 2.0) <= 1e-6);
  CHECK(r.report["manifest"]["seed"] == 3);
  CHECK(r.report["manifest"]["command"] == "expect");
  CHECK(r.report["manifest"]["parameters"]["--stat"] == "psi_k");
}

TEST_CASE("expect norm1 under geometric weights") {
  const Result r = run({"expect", "--stat", "norm1", "--phi", "geometric:2", "--p", "0.5",
                        "--count", "50000", "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(r.report["closed_form"]["value"] == 0.5);
  CHECK(r.report["agree_4sigma"] == true);
}

TEST_CASE("expect errors") {
  const Result zero = run({"expect", "--stat", "psi_k", "--k", "1", "--p", "0", "--count",
                           "100", "--seed", "1"});
  CHECK(zero.code == 2);
  CHECK(zero.report["error"] == "divergent-expectation");
  const Result unknown = run({"expect", "--stat", "median", "--p", "0.5"});
  CHECK(unknown.code == 2);
  CHECK(run({"expect", "--stat", "psi_k", "--p", "0.5", "--mode", "sideways"}).code == 2);
}

TEST_CASE("expect is seed reproducible") {
  const std::vector<std::string> args = {"expect", "--stat", "norminf", "--phi", "geometric:2",
                                         "--p", "0.3", "--count", "20000", "--seed", "11"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("transfer") {
  const Result id = run({"transfer", "--f", "identity", "--count", "50000", "--seed", "2"});
  REQUIRE(id.code == 0);
  CHECK(std::abs(id.report["interval_side"]["value"].get<double>() - 0.5) <= 1e-12);
  CHECK(id.report["agree_4sigma"] == true);

  const Result log = run({"transfer", "--f", "neg-floor-log2", "--count", "50000", "--seed",
                          "2"});
  REQUIRE(log.code == 0);
  CHECK(std::abs(log.report["interval_side"]["value"].get<double>() - 2.0) <= 1e-9);

  const Result exact = run({"transfer", "--f", "indicator:0.25:0.75", "--exact"});
  REQUIRE(exact.code == 0);
  CHECK(exact.report["graph_side"]["exact"] == "1/2");
  CHECK(exact.report["interval_side"]["exact"] == "1/2");
  CHECK(exact.report["exact_equal"] == true);

  CHECK(run({"transfer", "--f", "cosine"}).code == 2);
  CHECK(run({"transfer", "--f", "indicator:0.2:0.7", "--exact"}).code == 2);
}

TEST_CASE("measure queries") {
  const Result ball = run({"measure", "ball", "--radius", "0.011", "--kind", "open"});
  REQUIRE(ball.code == 0);
  CHECK(ball.report["measure"]["exact"] == "3/8");

  const Result cyl = run({"measure", "cylinder", "--forbidden", "1", "--required", "2", "--p",
                          "1/2"});
  REQUIRE(cyl.code == 0);
  CHECK(cyl.report["measure"]["exact"] == "1/4");

  const Result atoms = run({"measure", "atoms", "--p", "0.9", "--depth", "20"});
  REQUIRE(atoms.code == 0);
  CHECK(atoms.report["pi_final"]["value"].get<double>() ==
        doctest::Approx(0.12157665459056928).epsilon(1e-12));
  CHECK(atoms.report["maximal_atom_prefix"] == std::string(20, '1'));

  const Result ones = run({"measure", "ball", "--radius", "0.0~"});
  CHECK(ones.code == 2);
  CHECK(ones.report["error"] == "unsupported-exact-radius");
  const Result third = run({"measure", "ball", "--radius", "1/3"});
  CHECK(third.code == 2);
  const Result bracket = run({"measure", "ball", "--radius", "1/3", "--bracket-bits", "10"});
  REQUIRE(bracket.code == 0);
  const Rational lo = parse_rational(bracket.report["lower"]["exact"].get<std::string>());
  const Rational hi = parse_rational(bracket.report["upper"]["exact"].get<std::string>());
  CHECK(lo <= Rational(1, 3));
  CHECK(Rational(1, 3) <= hi);
}

TEST_CASE("wht round trip through files") {
  TempDir dir;
  spill(dir.file("const1.bin"), encode_table(3, std::vector<double>(8, 1.0)));
  const Result fwd = run({"wht", "--depth", "3", "--in", dir.file("const1.bin")});
  REQUIRE(fwd.code == 0);
  CHECK(fwd.report["nonzero_count"] == 1);
  CHECK(fwd.report["nonzero"][0]["index"] == 0);
  CHECK(fwd.report["nonzero"][0]["value"] == 1.0);

  oracle::Gen gen(91);
  std::vector<double> f(1024);
  for (double& v : f) v = 2.0 * gen.real01() - 1.0;
  spill(dir.file("f.bin"), encode_table(10, f));
  REQUIRE(run({"wht", "--in", dir.file("f.bin"), "--out", dir.file("spec.bin")}).code == 0);
  REQUIRE(run({"wht", "--inverse", "--in", dir.file("spec.bin"), "--out", dir.file("back.bin")})
              .code == 0);
  const std::string bytes = slurp(dir.file("back.bin"));
  const DecodedTable back = decode_table(
      {reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()}, std::nullopt);
  REQUIRE(back.values.size() == f.size());
  double err = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) err = std::max(err, std::abs(back.values[i] - f[i]));
  CHECK(err <= 1e-12);
  CHECK(run({"wht", "--in", dir.file("missing.bin")}).code == 2);
}

TEST_CASE("pd-check") {
  TempDir dir;
  spill(dir.file("uniform2.json"),
        R"({"support": [{"kind": "finite", "support": []},
                        {"kind": "finite", "support": [1]}],
            "weights": ["1/2", "1/2"]})");
  oracle::Gen gen(92);
  json graphs = json::array();
  for (int i = 0; i < 50; ++i) {
    const GraphRepr g = gen.graph(12);
    graphs.push_back({{"kind", g.is_finite() ? "finite" : "cofinite"},
                      {"support", std::vector<EdgeIndex>(g.support().begin(), g.support().end())}});
  }
  spill(dir.file("random50.json"), graphs.dump());
  const Result r = run({"pd-check", "--measure", dir.file("uniform2.json"), "--graphs",
                        dir.file("random50.json")});
  REQUIRE(r.code == 0);
  CHECK(r.report["psd"] == true);
  CHECK(r.report["size"] == 50);
  CHECK(r.report["f_zero"]["exact"] == "1");
  CHECK(r.report["min_eigenvalue"].get<double>() >= -1e-9);

  const Result bad = run({"pd-check", "--measure", R"({"support": [], "weights": []})",
                          "--graphs", dir.file("random50.json")});
  CHECK(bad.code == 2);
}

TEST_CASE("manifests are written and reproducible") {
  TempDir dir;
  const std::vector<std::string> args = {"sample", "--p", "3/10", "--depth", "12", "--count",
                                         "64", "--seed", "9", "--out", dir.file("s.bin"),
                                         "--manifest", dir.file("m.json")};
  REQUIRE(run(args).code == 0);
  const std::string first = slurp(dir.file("m.json"));
  const json m = json::parse(first);
  CHECK(m["command"] == "sample");
  CHECK(m["seed"] == 9);
  CHECK(m["parameters"]["--p"] == "3/10");
  CHECK(m["versions"]["graphspace"] == cli::kVersion);
  REQUIRE(m["outputs"].size() == 1);
  CHECK(m["outputs"][0]["bytes"] == fs::file_size(dir.file("s.bin")));
  REQUIRE(run(args).code == 0);
  CHECK(slurp(dir.file("m.json")) == first);
}

}  // namespace
}  // namespace graphspace
