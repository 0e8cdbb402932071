// Copyright 2026 The bogofock Authors
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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bogofock/serialization.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace bogofock {
namespace test_cli {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("bogofock_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

SCENARIO("validate") {
  GIVEN("The identity") {
    const auto file = write_temp("id.json", transform_to_json(BogoliubovTransform::identity(2)));
    const auto r = run({"validate", "--transform", file});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["max_residual"] == 0.0);
  }
  GIVEN("A broken R") {
    const auto file = write_temp("broken.json", R"({"n_modes":1,"S":[[[1,0]]],"R":[[[1,0]]],"t":[[0,0]]})");
    const auto r = run({"validate", "--transform", file});
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["pass"] == false);
  }
  GIVEN("Malformed JSON") {
    const auto file = write_temp("bad.json", "{\"n_modes\": 1, ");
    const auto r = run({"validate", "--transform", file});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
  }
  GIVEN("Two transform sources") {
    const auto file = write_temp("id1.json", transform_to_json(BogoliubovTransform::identity(1)));
    CHECK(run({"validate", "--transform", file, "--random", "1"}).code == 1);
    CHECK(run({"validate"}).code == 1);
  }
}

SCENARIO("element") {
  GIVEN("The identity") {
    const auto file = write_temp("id1.json", transform_to_json(BogoliubovTransform::identity(1)));
    const auto lines = json_lines(run({"element", "--transform", file, "--m", "0", "--n", "0"}).out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["re"] == 1.0);
    CHECK(lines[0]["im"] == 0.0);
  }
  GIVEN("A displacement") {
    const auto file = write_temp("disp.json", R"({"ops":[{"type":"displacement","t":[[0.5,0]]}]})");
    const auto r = run({"element", "--ops", file, "--m", "2", "--n", "0"});
    REQUIRE(r.code == 0);
    const auto lines = json_lines(r.out);
    CHECK(std::abs(lines.at(0)["re"].get<double>() - std::exp(-0.125) * 0.25 / std::sqrt(2.0)) < 1e-15);
  }
  GIVEN("A squeezing") {
    const auto file = write_temp("sq.json", R"({"ops":[{"type":"squeezing","sigma":[0.5]}]})");
    const auto lines = json_lines(run({"element", "--ops", file, "--m", "1;3", "--n", "0"}).out);
    REQUIRE(lines.size() == 2);
    for (const auto& l : lines) CHECK(std::abs(l["re"].get<double>()) < 1e-15);
  }
  GIVEN("A quadrature power") {
    const auto file = write_temp("id1.json", transform_to_json(BogoliubovTransform::identity(1)));
    const auto lines = json_lines(run({"element", "--transform", file, "--k", "2", "--kind", "momentum"}).out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["k"] == json::array({2}));
    CHECK(std::abs(lines[0]["re"].get<double>() - 0.5) < 1e-15);
  }
  GIVEN("Bad index lists") {
    const auto file = write_temp("id2.json", transform_to_json(BogoliubovTransform::identity(2)));
    CHECK(run({"element", "--transform", file, "--m", "1"}).code == 1);
    CHECK(run({"element", "--transform", file, "--m", "1,-1"}).code == 1);
    CHECK(run({"element", "--transform", file, "--m", "1,x"}).code == 1);
    CHECK(run({"element", "--transform", file, "--kind", "angle", "--k", "1,0"}).code == 1);
  }
}

SCENARIO("block") {
  const auto file = write_temp("id2.json", transform_to_json(BogoliubovTransform::identity(2)));
  GIVEN("JSON output") {
    const auto r = run({"block", "--transform", file, "--max-photons", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["rows"].size() == 9);
    for (const auto& norm : j["column_norm_squared"]) CHECK(norm == 1.0);
  }
  GIVEN("CSV output") {
    const auto r = run({"block", "--transform", file, "--max-photons", "1", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("m,n,re,im\n", 0) == 0);
    CHECK(r.out.find("n,norm_squared") != std::string::npos);
  }
  GIVEN("A lattice over the cap") {
    CHECK(run({"block", "--transform", file, "--max-photons", "200"}).code == 3);
  }
}

SCENARIO("verify") {
  GIVEN("The identity") {
    const auto file = write_temp("id1.json", transform_to_json(BogoliubovTransform::identity(1)));
    const auto r = run({"verify", "--transform", file});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["max_deviation"] == 0.0);
    CHECK(j["phase"] == json::array({1.0, 0.0}));
  }
  GIVEN("A random two-mode transform") {
    const auto r = run({"verify", "--random", "2", "--seed", "11", "--cutoff", "16", "--elements"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["max_deviation"].get<double>() <= 1e-7);
    CHECK(j["elements"].size() == j["count"].get<std::size_t>());
  }
  GIVEN("An explicit transform that needs decomposing") {
    const auto file = write_temp("rand.json", transform_to_json(random_transform(2, 0.6, 0.8, 4)));
    CHECK(run({"verify", "--transform", file}).code == 0);
  }
  GIVEN("A cutoff too small for the squeezing") {
    const auto file = write_temp("sq12.json", R"({"ops":[{"type":"squeezing","sigma":[1.2]}]})");
    const auto r = run({"verify", "--ops", file, "--cutoff", "16"});
    CHECK(r.code == 3);
  }
}

SCENARIO("profile") {
  GIVEN("The identity") {
    const auto file = write_temp("id1.json", transform_to_json(BogoliubovTransform::identity(1)));
    const auto r = run({"profile", "--transform", file, "--max-photons", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "total,m,intensity\n0,0,1\n1,1,0\n2,2,0\n3,3,0\n");
  }
  GIVEN("A unit displacement") {
    const auto file = write_temp("disp1.json", R"({"ops":[{"type":"displacement","t":[[0.6,0.8]]}]})");
    const auto r = run({"profile", "--ops", file, "--max-photons", "6"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    int k = 0;
    double factorial = 1.0;
    while (std::getline(in, line)) {
      const double intensity = std::stod(line.substr(line.rfind(',') + 1));
      CHECK(std::abs(intensity - std::exp(-1.0) / factorial) < 1e-14);
      ++k;
      factorial *= k;
    }
    CHECK(k == 7);
  }
  GIVEN("A squeezing") {
    const auto file = write_temp("sq.json", R"({"ops":[{"type":"squeezing","sigma":[0.5]}]})");
    CHECK(run({"profile", "--ops", file, "--format", "json"}).code == 1);
    const auto ok = run({"profile", "--ops", file, "--max-photons", "7", "--format", "csv"});
    REQUIRE(ok.code == 0);
    std::istringstream in(ok.out);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const int total = std::stoi(line);
      const double intensity = std::stod(line.substr(line.rfind(',') + 1));
      if (total % 2 == 1) CHECK(intensity < 1e-24);
    }
  }
}

SCENARIO("Transform round trip through the command line") {
  const auto r = run({"transform", "--random", "3", "--seed", "21"});
  REQUIRE(r.code == 0);
  const auto parsed = parse_transform(r.out);
  const auto expected = random_transform(3, 0.8, 1.0, 21);
  CHECK(parsed.s() == expected.s());
  CHECK(parsed.r() == expected.r());
  CHECK(parsed.t() == expected.t());
  const auto file = write_temp("round.json", r.out);
  const auto again = run({"transform", "--transform", file});
  CHECK(again.out == r.out);
}

SCENARIO("Output to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "bogofock_test_out.json").string();
  const auto r = run({"transform", "--random", "1", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::ostringstream content;
  content << in.rdbuf();
  CHECK_NOTHROW(parse_transform(content.str()));
}

}  // namespace test_cli
}  // namespace bogofock
