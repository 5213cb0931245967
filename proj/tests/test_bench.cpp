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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"

#include "hslasso/bench.hpp"

using namespace hslasso;

namespace {

BenchmarkGrid small_grid(std::uint64_t seed) {
  BenchmarkGrid g;
  g.scenarios = {{"sim1", scenario("sim1", 50, 20, seed)}, {"sim2", scenario("sim2", 50, 20, seed)}};
  g.epsilons = kDefaultEpsilons;
  g.methods = {Method::ista, Method::fista, Method::cd, Method::sl, Method::hs};
  return g;
}

}  // namespace

TEST_CASE("default grid") {
  const auto g = default_grid(7);
  CHECK(g.scenarios.size() == 4);
  CHECK(g.epsilons.size() == 9);
  CHECK(g.t0 == 3.0);
  CHECK(g.h == 0.1);
  CHECK(g.lambda == 1e-3);
  CHECK(g.inner_fixed == 50);
  CHECK_NOTHROW(g.validate());
  auto bad = g;
  bad.epsilons = {0.01, 0.02};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = g;
  bad.methods.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("table shape and monotone thresholds") {
  BenchmarkGrid g;
  g.scenarios = {{"sim1", scenario("sim1", 50, 20, 7)}};
  g.epsilons = kDefaultEpsilons;
  g.methods = {Method::ista, Method::fista, Method::hs};
  const auto r = run_benchmark(g);
  std::ostringstream out;
  write_table_csv(out, r);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("scenario,n,p,seed,method,eps_0.05,", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 4 + 9);
  }
  CHECK(rows == 3);
  for (const auto& c : r.scenarios[0].cells) {
    for (std::size_t i = 1; i < c.hits.size(); ++i) {
      REQUIRE(c.hits[i].has_value());
      CHECK(c.hits[i]->total() >= c.hits[i - 1]->total());
      CHECK(*c.gaps[i] <= g.epsilons[i]);
    }
  }
}

TEST_CASE("benchmark output is independent of thread count") {
  const auto g = small_grid(3);
  const auto a = run_benchmark(g, 1);
  const auto b = run_benchmark(g, 4);
  std::ostringstream ta, tb, ca, cb;
  write_table_csv(ta, a);
  write_table_csv(tb, b);
  write_curve_csv(ca, a);
  write_curve_csv(cb, b);
  CHECK(ta.str() == tb.str());
  CHECK(ca.str() == cb.str());
  CHECK(bench_metadata(a) == bench_metadata(b));
}

TEST_CASE("curve file columns") {
  BenchmarkGrid g;
  g.scenarios = {{"sim2", scenario("sim2", 50, 20, 1)}};
  g.epsilons = {0.05, 0.01};
  g.methods = {Method::fista};
  const auto r = run_benchmark(g);
  std::ostringstream out;
  write_curve_csv(out, r);
  std::istringstream lines(out.str());
  std::string header, row;
  std::getline(lines, header);
  CHECK(header ==
        "scenario,n,p,seed,method,epsilon,log_inv_eps,gap,ops_total,ops_setup,ops_mult,ops_add,ops_trans,ops_cmp,log_ops");
  std::getline(lines, row);
  CHECK(row.rfind("sim2,50,20,1,FISTA,0.05,", 0) == 0);
  const auto meta = bench_metadata(r);
  CHECK(meta["reference_tolerance"] == 1e-10);
  CHECK(meta["hs"]["inner_fixed"] == 50);
  CHECK(bench_to_json(r)["rows"].size() == 1);
}

TEST_CASE("log-log slope") {
  const std::vector<double> eps{0.1, 0.01, 0.001};
  std::vector<double> ops;
  for (double e : eps) ops.push_back(7.0 * std::pow(1.0 / e, 0.6));
  CHECK(loglog_slope(eps, ops) == doctest::Approx(0.6));
  CHECK_THROWS_AS(loglog_slope({0.1}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(loglog_slope({0.1, 0.1}, {1.0, 2.0}), std::invalid_argument);
}
