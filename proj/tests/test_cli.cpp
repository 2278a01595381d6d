// Copyright 2026 The Tabloid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tabloid/io.hpp"

using namespace tabloid;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  INFO(r.err);
  REQUIRE(r.code == 0);
  return parse_json(r.out);
}

class Scratch {
 public:
  Scratch() : dir_(std::filesystem::temp_directory_path() / ("tabloid_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir_);
  }
  ~Scratch() { std::filesystem::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& content) const {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << content;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

const char* kTieBallots = R"({"n":3,"shape":[1,1,1],"ballots":[
  {"ranking":[[1],[2],[3]],"count":2},{"ranking":[[3],[1],[2]],"count":2},{"ranking":[[2],[3],[1]],"count":1}]})";

}  // namespace

TEST_CASE("tally") {
  Scratch s;
  const auto csv = s.write("example.csv", "1>2>3,3\n1>3>2,2\n2>1>3,4\n2>3>1,2\n3>1>2,0\n3>2>1,3\n");
  auto j = run_json({"tally", "--ballots", csv, "--weights-preset", "borda"});
  CHECK(j["input"]["voter_total"] == "14");
  CHECK(j["result"]["scores"] == Json::parse(R"({"1":"14","2":"18","3":"10"})"));
  CHECK(j["result"]["winners"] == Json::parse(R"(["2"])"));

  const auto tie = s.write("tie.json", kTieBallots);
  j = run_json({"tally", "--ballots", tie, "--weights-preset", "plurality"});
  CHECK(j["result"]["scores"] == Json::parse(R"({"1":"2","2":"1","3":"2"})"));
  CHECK(j["result"]["winners"] == Json::parse(R"(["1","3"])"));

  const auto empty = s.write("empty.json", R"({"n":3,"shape":[1,1,1],"ballots":[]})");
  j = run_json({"tally", "--ballots", empty, "--weights-preset", "borda"});
  CHECK(j["result"]["winners"].size() == 3);
  CHECK(j["input"]["voter_total"] == "0");

  const auto weights = s.write("w.json", R"({"weights":["1","1/2","0"]})");
  j = run_json({"--approx", "tally", "--ballots", csv, "--weights", weights});
  CHECK(j["result"]["scores"]["1"] == "7");
  CHECK(j["result"]["scores_approx"]["1"] == "7");
  const auto thirds = s.write("w3.json", R"({"weights":["2/3","1/3","0"]})");
  j = run_json({"--approx", "tally", "--ballots", s.write("one.csv", "1>2>3,1\n"), "--weights", thirds});
  CHECK(j["result"]["scores"]["1"] == "2/3");
  CHECK(j["result"]["scores_approx"]["1"] == "0.666666666667");
  CHECK(j["result"]["approx_significant_digits"] == 12);
}

TEST_CASE("kemeny and family") {
  Scratch s;
  const auto tie = s.write("tie.json", kTieBallots);
  const auto kemeny = run_json({"kemeny", "--ballots", tie});
  CHECK(kemeny["result"]["winners"] == Json::parse(R"(["1>2>3","3>1>2"])"));
  CHECK(kemeny["result"]["scores"]["2>3>1"] == "7");
  const auto family = run_json({"family", "--ballots", tie, "--gamma0", "9", "--gamma1", "4", "--gamma2", "1"});
  CHECK(family["result"].dump() == kemeny["result"].dump());
  const auto flat = run_json({"family", "--ballots", tie, "--gamma0", "0", "--gamma1", "0", "--gamma2", "0"});
  CHECK(flat["result"]["winners"].size() == 6);
}

TEST_CASE("decompose") {
  Scratch s;
  const auto constant = s.write("c.csv", "1>2>3,1\n1>3>2,1\n2>1>3,1\n2>3>1,1\n3>1>2,1\n3>2>1,1\n");
  const auto j = run_json({"decompose", "--ballots", constant});
  CHECK(j["result"]["W0"]["values"].size() == 6);
  CHECK(j["result"]["W1"]["values"].empty());
  CHECK(j["result"]["W2"]["values"].empty());
  CHECK(j["result"]["residual"]["values"].empty());
  CHECK(j["result"]["W0"]["squared_norm"] == "6");
  const auto round = module_vector_from_json(j["result"]["W0"]);
  CHECK(round.sum() == 6);
}

TEST_CASE("construct-profile") {
  Scratch s;
  const auto input = s.write("in.json", R"({"weights":[[1,0,0],[2,1,0]]})");
  const auto a = run({"--seed", "7", "construct-profile", "--input", input, "--as-integer-profile"});
  const auto b = run({"construct-profile", "--input", input, "--as-integer-profile", "--seed", "7"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = parse_json(a.out);
  CHECK(j["result"]["tallies"] == j["parameters"]["targets"]);
  CHECK(j["result"].contains("integer_profile"));
  const auto strict = run({"construct-profile", "--input", input, "--as-integer-profile", "--shift-bound", "0",
                           "--seed", "7"});
  CHECK(strict.code == kExitDomain);
  const auto fixed = s.write("fixed.json", R"({"weights":[[2,1,0]],"targets":[["1","0","-1"]]})");
  CHECK(run_json({"construct-profile", "--input", fixed})["result"]["tallies"] ==
        Json::parse(R"([["1","0","-1"]])"));
  const auto bad = s.write("bad.json", R"({"weights":[[2,1,0]],"targets":[["1","0","1"]]})");
  CHECK(run({"construct-profile", "--input", bad}).code == kExitDomain);
}

TEST_CASE("game commands") {
  Scratch s;
  const auto glove = s.write("glove.json", R"({"n":3,"v":{"3":1,"5":1,"7":1}})");
  auto j = run_json({"game-solve", "--game", glove, "--concept", "shapley"});
  CHECK(j["result"]["payoffs"] == Json::parse(R"({"1":"2/3","2":"1/6","3":"1/6"})"));
  CHECK(j["input"]["grand_value"] == "1");
  const auto coeffs = s.write("c.json", R"({"c0":["0","0","1"],"c1":["1/2","1/2"]})");
  j = run_json({"game-solve", "--game", glove, "--coeffs", coeffs});
  CHECK(j["result"]["payoffs"]["1"] == "2/3");
  const auto marginal = s.write("m.json", R"({"m":["1/3","1/6","1/3"]})");
  j = run_json({"game-solve", "--game", glove, "--marginal", marginal});
  CHECK(j["result"]["payoffs"]["2"] == "1/6");

  j = run_json({"game-analyze", "--coeffs", coeffs});
  CHECK(j["result"]["efficient"]["value"] == true);
  CHECK(j["result"]["marginal"]["value"] == true);
  CHECK(j["result"]["marginal"]["m"] == Json::parse(R"(["1/3","1/6","1/3"])"));
  CHECK(j["result"]["self_dual"]["value"] == true);
  const auto first = s.write("first.json", R"({"m":["1","0","0"]})");
  j = run_json({"game-analyze", "--marginal", first});
  CHECK(j["result"]["efficient"]["value"] == false);
  CHECK(j["result"]["self_dual"]["value"] == false);
  CHECK(j["result"]["marginal"]["value"] == true);

  j = run_json({"game-decompose", "--game", glove});
  CHECK(j["result"]["levels"].size() == 3);
  CHECK(j["result"]["levels"][2]["u1"]["values"].empty());
}

TEST_CASE("formats and output files") {
  Scratch s;
  const auto tie = s.write("tie.json", kTieBallots);
  auto r = run({"--format", "csv", "tally", "--ballots", tie, "--weights-preset", "borda"});
  CHECK(r.out == "item,score\n1,6\n2,4\n3,5\n");
  r = run({"--format", "pretty", "kemeny", "--ballots", tie});
  CHECK(r.out.find("voter_total: \"5\"") != std::string::npos);
  const auto out = s.path("report.json");
  r = run({"--output", out, "kemeny", "--ballots", tie});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(parse_json(read_file(out))["command"] == "kemeny");
}

TEST_CASE("exit codes") {
  Scratch s;
  const auto tie = s.write("tie.json", kTieBallots);
  CHECK(run({"tally", "--ballots", s.write("broken.json", "{"), "--weights-preset", "borda"}).code == kExitParse);
  CHECK(run({"tally", "--ballots", tie, "--bogus"}).code == kExitParse);
  CHECK(run({}).code == kExitParse);
  CHECK(run({"tally", "--ballots", tie, "--weights", s.write("w4.json", R"({"weights":[3,2,1,0]})")}).code ==
        kExitShape);
  const auto up = s.write("up.json", R"({"weights":[0,1,2]})");
  CHECK(run({"tally", "--ballots", tie, "--weights", up}).code == kExitDomain);
  CHECK(run({"tally", "--ballots", tie, "--weights", up, "--allow-unsorted"}).code == kExitOk);
  const auto partial = s.write("p.csv", "1>2=3,1\n");
  CHECK(run({"kemeny", "--ballots", partial}).code == kExitShape);
  const auto big = s.write("big.csv", "1>2>3>4>5>6>7>8>9>10>11,1\n");
  CHECK(run({"decompose", "--ballots", big}).code == kExitCapacity);
  const auto err = run({"game-solve", "--game", s.write("g.json", R"({"n":2,"v":{"9":1}})"), "--concept", "shapley"});
  CHECK(err.code == kExitParse);
  CHECK(err.err.find("v.9") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}
