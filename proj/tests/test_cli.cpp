// Copyright 2026 The hslasso Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "hslasso_cli_tests";

int run(const std::string& args) {
  const std::string cmd = std::string(HSLASSO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("datagen then solve") {
  fs::remove_all(kDir);
  const std::string out = "--out-dir " + kDir.string();
  REQUIRE(run("datagen --seed 7 --n 50 --p 20 " + out) == 0);
  CHECK(fs::exists(kDir / "problem.json"));
  CHECK(fs::exists(kDir / "problem.meta.json"));
  const std::string input = (kDir / "problem.json").string();
  CHECK(run("solve --method hs --input " + input + " --epsilon 0.005 --t0 3 --h 0.1 " + out) == 0);
  const std::string trace = slurp(kDir / "trace_hs.csv");
  CHECK(trace.rfind("k,t_k,inner_iters,F,F_t,ops\n0,3,0,", 0) == 0);
  CHECK(run("solve --method ista --input " + input + " --max-iters 2 --epsilon 1e-9 " + out) == 1);
  CHECK(run("solve --method fista --input " + input + " --format json " + out) == 0);
  CHECK(fs::exists(kDir / "trace_fista.json"));

  REQUIRE(run("datagen --binary --name pb --seed 7 " + out) == 0);
  CHECK(fs::file_size(kDir / "pb.bin") == 20 + 8 * (50 + 50 * 20));
  CHECK(run("solve --method cd --input " + (kDir / "pb.bin").string() + " " + out) == 0);
}

TEST_CASE("bench example") {
  const std::string out = "--out-dir " + (kDir / "bench").string();
  REQUIRE(run("bench --scenario sim1 --n 50 --p 20 --methods ista,fista,hs --seed 7 " + out) == 0);
  const std::string table = slurp(kDir / "bench" / "bench_table.csv");
  CHECK(std::count(table.begin(), table.end(), '\n') == 4);
  CHECK(fs::exists(kDir / "bench" / "bench_curves.csv"));
  CHECK(fs::exists(kDir / "bench" / "bench_meta.json"));
}

TEST_CASE("verify writes a report") {
  const std::string out = "--out-dir " + (kDir / "verify").string();
  REQUIRE(run("verify --scenario sim2 --seed 1 " + out) == 0);
  const std::string report = slurp(kDir / "verify" / "verify.json");
  CHECK(report.find("\"sweep\"") != std::string::npos);
  CHECK(report.find("\"prop2\"") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("bench --bogus") == 2);
  CHECK(run("solve --method lars --input /nonexistent") == 2);
  CHECK(run("datagen --format xml") == 2);
  CHECK(run("bench --methods ista,hs --epsilons 0.01,0.02 --out-dir " + (kDir / "x").string()) == 2);
}

TEST_CASE("numerical failure exits with 3") {
  // A response far outside any reachable t makes the t0 search give up.
  fs::create_directories(kDir);
  std::ofstream(kDir / "huge.json") << R"({"n":1,"p":1,"lambda":0.001,"y":[1e30],"X":[[1.0]]})";
  CHECK(run("solve --method hs --input " + (kDir / "huge.json").string() + " --out-dir " + kDir.string()) == 3);
}
