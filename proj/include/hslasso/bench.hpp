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

#ifndef HSLASSO_BENCH_HPP
#define HSLASSO_BENCH_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hslasso/datagen.hpp"
#include "hslasso/opcount.hpp"
#include "hslasso/trace.hpp"

namespace hslasso {

struct BenchScenario {
  std::string name;  // "sim1" or "sim2"
  SyntheticSpec spec;
};

struct BenchmarkGrid {
  std::vector<BenchScenario> scenarios;
  std::vector<double> epsilons;  // strictly descending
  std::vector<Method> methods;
  double lambda = 1e-3;
  double t0 = 3.0;
  double h = 0.1;
  long inner_fixed = 50;
  double sl_alpha = 100.0;
  long max_iters = 200000;  // baselines, per run
  double baseline_start = 1.0;  // beta0 = baseline_start * ones

  void validate() const;
};

inline const std::vector<double> kDefaultEpsilons{0.05, 0.03, 0.02, 0.01, 0.009, 0.008, 0.007, 0.006, 0.005};

/// (n=50, p=20) and (n=50, p=80) for sim1 and sim2, every scenario seeded
/// with seed; methods ISTA, FISTA, HS.
BenchmarkGrid default_grid(std::uint64_t seed);

struct BenchCell {
  Method method = Method::ista;
  std::vector<std::optional<OpSnapshot>> hits;  // per epsilon, cumulative at first hit
  std::vector<std::optional<double>> gaps;      // F - F_min at that row
  bool converged = false;
  std::size_t rows = 0;
};

struct ScenarioResult {
  BenchScenario scenario;
  double f_min = 0.0;
  std::vector<BenchCell> cells;  // grid.methods order
};

struct BenchResult {
  BenchmarkGrid grid;
  std::vector<ScenarioResult> scenarios;
};

/// Runs every (scenario, method) cell once, to the smallest epsilon, reading
/// looser thresholds off the same trace. Cells run on up to `threads`
/// workers; results do not depend on the thread count.
BenchResult run_benchmark(const BenchmarkGrid& grid, unsigned threads = 1);

/// One row per (scenario, method), one column per epsilon with main-bucket
/// op totals; empty when a method never reached that precision.
void write_table_csv(std::ostream& out, const BenchResult& result);
/// Long format, one row per (scenario, method, epsilon) reached.
void write_curve_csv(std::ostream& out, const BenchResult& result);
nlohmann::json bench_metadata(const BenchResult& result);
nlohmann::json bench_to_json(const BenchResult& result);

/// Least-squares slope of log(ops) against log(1/eps).
double loglog_slope(const std::vector<double>& epsilons, const std::vector<double>& ops);

}  // namespace hslasso

#endif  // HSLASSO_BENCH_HPP
