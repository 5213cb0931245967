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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "hslasso/baselines.hpp"
#include "hslasso/bench.hpp"
#include "hslasso/datagen.hpp"
#include "hslasso/diagnostics.hpp"
#include "hslasso/hs_solver.hpp"
#include "hslasso/io.hpp"

namespace fs = std::filesystem;
using namespace hslasso;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct Globals {
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "csv";
};

struct DatagenArgs {
  std::string scenario = "sim1";
  long n = 50;
  long p = 20;
  std::optional<double> rho;
  std::optional<double> snr;
  std::optional<long> s;
  double lambda = 1e-3;
  std::string name = "problem";
  bool binary = false;
};

struct SolveArgs {
  std::string method = "hs";
  std::string input;
  double epsilon = 0.005;
  std::optional<double> t0;
  double h = 0.1;
  std::optional<double> B;
  double tau = 1e-4;
  std::string inner_mode = "fixed";
  long inner_fixed = 50;
  double inner_tol = 1e-8;
  std::string outer = "oracle";
  std::string config;
  std::string beta0 = "ones";
  double sl_alpha = 100.0;
  std::string sl_penalty = "softplus";
  long max_iters = 200000;
};

struct BenchArgs {
  std::vector<std::string> scenarios{"sim1", "sim2"};
  std::vector<long> ns{50};
  std::vector<long> ps{20, 80};
  std::vector<std::string> methods{"ista", "fista", "hs"};
  std::vector<double> epsilons = kDefaultEpsilons;
  long inner_fixed = 50;
  double t0 = 3.0;
  double h = 0.1;
  double lambda = 1e-3;
  double sl_alpha = 100.0;
  unsigned threads = 1;
};

struct VerifyArgs {
  std::string input;
  std::string scenario = "sim1";
  long n = 50;
  long p = 20;
  std::vector<double> ts{1.0, 0.1, 0.01, 1e-3, 1e-4};
};

json trace_to_json(const SolverTrace& trace) {
  json rows = json::array();
  for (const auto& r : trace.records) {
    rows.push_back({{"k", r.k},
                    {"t_k", r.t_k},
                    {"inner_iters", r.inner_iters},
                    {"F", r.F},
                    {"F_t", r.F_t},
                    {"ops", r.ops.total()},
                    {"ops_setup", r.ops.setup_ops}});
  }
  return {{"method", method_name(trace.method)},
          {"converged", trace.converged},
          {"max_abs_iterate", trace.max_abs_iterate},
          {"bound_violated", trace.bound_violated},
          {"guard_events", trace.guard_events},
          {"final_beta", std::vector<double>(trace.final_beta.begin(), trace.final_beta.end())},
          {"records", rows}};
}

SyntheticSpec datagen_spec(const DatagenArgs& a, std::uint64_t seed) {
  SyntheticSpec spec = scenario(a.scenario, a.n, a.p, seed);
  if (a.rho) spec.rho = *a.rho;
  if (a.snr) spec.snr = *a.snr;
  if (a.s) spec.s = *a.s;
  return spec;
}

int cmd_datagen(const Globals& g, const DatagenArgs& a) {
  const SyntheticSpec spec = datagen_spec(a, g.seed);
  const SyntheticInstance inst = generate(spec, a.lambda);
  fs::create_directories(g.out_dir);
  const fs::path path = fs::path(g.out_dir) / (a.name + (a.binary ? ".bin" : ".json"));
  save_problem(path, inst.problem);
  const json meta{{"scenario", a.scenario},
                  {"n", spec.n},
                  {"p", spec.p},
                  {"rho", spec.rho},
                  {"snr", spec.snr},
                  {"pattern", pattern_name(spec.pattern)},
                  {"s", spec.s},
                  {"seed", spec.seed},
                  {"lambda", a.lambda},
                  {"q", inst.q},
                  {"beta_true", std::vector<double>(inst.beta_true.begin(), inst.beta_true.end())},
                  {"rng", kRngIdentifier},
                  {"problem_file", path.filename().string()}};
  write_json_file(fs::path(g.out_dir) / (a.name + ".meta.json"), meta);
  std::cout << path.string() << '\n';
  return kExitOk;
}

int cmd_solve(const Globals& g, const SolveArgs& a, const CLI::App& sub) {
  const LassoProblem problem = load_problem(a.input);
  const ReferenceSolution ref = reference_minimum(problem);
  const Method method = parse_method(a.method);
  OpCounter counter;
  SolverTrace trace;
  json info{{"method", method_name(method)}, {"f_min", ref.f_min}, {"reference_tolerance", ref.gap_tolerance}};

  if (method == Method::hs) {
    HSConfig c = a.config.empty() ? HSConfig{} : hs_config_from_json(read_json_file(a.config));
    // Flags given explicitly override the config file.
    auto given = [&](const char* flag) { return sub.count(flag) > 0 || a.config.empty(); };
    if (sub.count("--t0")) c.t0 = a.t0;
    if (sub.count("--B")) c.B = a.B;
    if (given("--h")) c.h = a.h;
    if (given("--epsilon")) c.epsilon = a.epsilon;
    if (given("--tau")) c.tau = a.tau;
    if (given("--inner-mode")) {
      c.inner.mode = a.inner_mode == "theoretical" ? InnerStopMode::theoretical
                     : a.inner_mode == "gradient"  ? InnerStopMode::gradient
                                                   : InnerStopMode::fixed;
    }
    if (given("--inner-fixed")) c.inner.count = a.inner_fixed;
    if (given("--inner-tol")) c.inner.tol = a.inner_tol;
    if (given("--outer")) {
      c.outer = a.outer == "theoretical_count" ? OuterStopMode::theoretical_count
                : a.outer == "t_floor"         ? OuterStopMode::t_floor
                                               : OuterStopMode::oracle;
    }
    c.ref = ref;
    HSRunInfo run;
    trace = hs_solve(problem, c, counter, &run);
    info["hs"] = hs_config_to_json(c);
    info["t0"] = run.t0;
    info["t0_searched"] = run.t0_searched;
    info["B"] = run.B;
    info["init_rule"] = run.init_rule;
    info["t0_predicate"] = "lambda*log(1+t)^2/(3*t^3)";
    if (run.planned_outer >= 0) info["planned_outer"] = run.planned_outer;
  } else {
    BaselineConfig c;
    c.method = method;
    c.beta0 = a.beta0 == "zeros" ? Vector::Zero(problem.p()) : Vector::Ones(problem.p());
    c.epsilon = a.epsilon;
    c.max_iters = a.max_iters;
    if (method == Method::sl) {
      c.sl_alpha = a.sl_alpha;
      c.sl_penalty = a.sl_penalty == "literal" ? SmoothPenalty::literal : SmoothPenalty::softplus;
      info["sl_alpha"] = a.sl_alpha;
      info["sl_penalty"] = a.sl_penalty;
    }
    c.ref = ref;
    trace = baseline_solve(problem, c, counter);
    info["beta0"] = a.beta0;
  }

  fs::create_directories(g.out_dir);
  const std::string stem = "trace_" + a.method;
  info["converged"] = trace.converged;
  info["ops_total"] = counter.total();
  info["ops_setup"] = counter.snapshot().setup_ops;
  info["final_gap"] = trace.records.back().F - ref.f_min;
  if (g.format == "json") {
    json doc = trace_to_json(trace);
    doc["info"] = info;
    write_json_file(fs::path(g.out_dir) / (stem + ".json"), doc);
  } else {
    std::ofstream out(fs::path(g.out_dir) / (stem + ".csv"));
    write_trace_csv(trace, out);
    write_json_file(fs::path(g.out_dir) / (stem + ".meta.json"), info);
  }
  std::cout << info.dump() << '\n';
  return trace.converged ? kExitOk : kExitNotConverged;
}

int cmd_bench(const Globals& g, const BenchArgs& a) {
  BenchmarkGrid grid;
  for (const auto& name : a.scenarios) {
    for (long n : a.ns) {
      for (long p : a.ps) grid.scenarios.push_back({name, scenario(name, n, p, g.seed)});
    }
  }
  grid.epsilons = a.epsilons;
  grid.methods.clear();
  for (const auto& m : a.methods) grid.methods.push_back(parse_method(m));
  grid.inner_fixed = a.inner_fixed;
  grid.t0 = a.t0;
  grid.h = a.h;
  grid.lambda = a.lambda;
  grid.sl_alpha = a.sl_alpha;
  const BenchResult result = run_benchmark(grid, a.threads);

  fs::create_directories(g.out_dir);
  const fs::path dir(g.out_dir);
  if (g.format == "json") {
    write_json_file(dir / "bench.json", bench_to_json(result));
  } else {
    std::ofstream table(dir / "bench_table.csv");
    write_table_csv(table, result);
    std::ofstream curves(dir / "bench_curves.csv");
    write_curve_csv(curves, result);
    write_json_file(dir / "bench_meta.json", bench_metadata(result));
  }
  write_table_csv(std::cout, result);
  return kExitOk;
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  const LassoProblem problem =
      a.input.empty() ? generate(scenario(a.scenario, a.n, a.p, g.seed)).problem : load_problem(a.input);
  const ReferenceSolution ref = reference_minimum(problem);
  const auto support = support_set(ref.beta_hat, default_support_tolerance(ref.beta_hat));

  json doc{{"n", problem.n()}, {"p", problem.p()}, {"lambda", problem.lambda()}, {"f_min", ref.f_min}};
  doc["support"] = support;
  try {
    doc["prop2"] = to_json(prop2_condition_check(problem.X(), support));
  } catch (const std::invalid_argument& e) {
    doc["prop2"] = {{"skipped", e.what()}};
  }
  doc["sweep"] = to_json(surrogate_sweep(problem, ref.beta_hat, a.ts));

  fs::create_directories(g.out_dir);
  write_json_file(fs::path(g.out_dir) / "verify.json", doc);
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy-shrinkage Lasso solver, baselines and benchmark harness"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--out-dir", g.out_dir, "Output directory");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  DatagenArgs dg;
  auto* datagen = app.add_subcommand("datagen", "Generate a synthetic problem");
  datagen->add_option("--scenario", dg.scenario)->check(CLI::IsMember({"sim1", "sim2"}));
  datagen->add_option("--n", dg.n)->check(CLI::PositiveNumber);
  datagen->add_option("--p", dg.p)->check(CLI::PositiveNumber);
  datagen->add_option("--rho", dg.rho);
  datagen->add_option("--snr", dg.snr);
  datagen->add_option("--s", dg.s, "Nonzeros of the sparse pattern");
  datagen->add_option("--lambda", dg.lambda);
  datagen->add_option("--name", dg.name, "Output file stem");
  datagen->add_flag("--binary", dg.binary, "Write the binary format instead of JSON");

  SolveArgs sv;
  auto* solve = app.add_subcommand("solve", "Run one solver with operation counting");
  solve->set_help_flag("--help", "Print this help message and exit");
  solve->add_option("--method", sv.method)->check(CLI::IsMember({"ista", "fista", "cd", "sl", "hs"}, CLI::ignore_case));
  solve->add_option("--input", sv.input)->required()->check(CLI::ExistingFile);
  solve->add_option("--epsilon", sv.epsilon);
  solve->add_option("--t0", sv.t0, "Initial t (searched when omitted)");
  solve->add_option("--h", sv.h);
  solve->add_option("--B", sv.B);
  solve->add_option("--tau", sv.tau);
  solve->add_option("--inner-mode", sv.inner_mode)->check(CLI::IsMember({"fixed", "theoretical", "gradient"}));
  solve->add_option("--inner-fixed", sv.inner_fixed, "AGD steps per outer iteration in fixed mode");
  solve->add_option("--inner-tol", sv.inner_tol);
  solve->add_option("--outer", sv.outer)->check(CLI::IsMember({"oracle", "theoretical_count", "t_floor"}));
  solve->add_option("--config", sv.config, "HS config JSON")->check(CLI::ExistingFile);
  solve->add_option("--beta0", sv.beta0, "Baseline start")->check(CLI::IsMember({"zeros", "ones"}));
  solve->add_option("--sl-alpha", sv.sl_alpha);
  solve->add_option("--sl-penalty", sv.sl_penalty)->check(CLI::IsMember({"softplus", "literal"}));
  solve->add_option("--max-iters", sv.max_iters);

  BenchArgs bn;
  std::string scenario_flag;
  std::optional<long> n_flag, p_flag;
  auto* bench = app.add_subcommand("bench", "Run the benchmark grid");
  bench->set_help_flag("--help", "Print this help message and exit");
  bench->add_option("--scenario", scenario_flag, "sim1, sim2 or all")->check(CLI::IsMember({"sim1", "sim2", "all"}));
  bench->add_option("--n", n_flag);
  bench->add_option("--p", p_flag);
  bench->add_option("--methods", bn.methods)->delimiter(',');
  bench->add_option("--epsilons", bn.epsilons)->delimiter(',');
  bench->add_option("--inner-fixed", bn.inner_fixed, "AGD steps per HS outer iteration");
  bench->add_option("--t0", bn.t0);
  bench->add_option("--h", bn.h);
  bench->add_option("--lambda", bn.lambda);
  bench->add_option("--sl-alpha", bn.sl_alpha);
  bench->add_option("--threads", bn.threads)->check(CLI::PositiveNumber);

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Diagnostics: support set, design conditions, surrogate sweep");
  verify->add_option("--input", vf.input)->check(CLI::ExistingFile);
  verify->add_option("--scenario", vf.scenario)->check(CLI::IsMember({"sim1", "sim2"}));
  verify->add_option("--n", vf.n)->check(CLI::PositiveNumber);
  verify->add_option("--p", vf.p)->check(CLI::PositiveNumber);
  verify->add_option("--t", vf.ts, "Sweep values of t")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*datagen) return cmd_datagen(g, dg);
    if (*solve) return cmd_solve(g, sv, *solve);
    if (*bench) {
      if (!scenario_flag.empty() && scenario_flag != "all") bn.scenarios = {scenario_flag};
      if (n_flag) bn.ns = {*n_flag};
      if (p_flag) bn.ps = {*p_flag};
      for (auto& m : bn.methods) {
        (void)parse_method(m);
      }
      return cmd_bench(g, bn);
    }
    if (*verify) return cmd_verify(g, vf);
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotConverged;
  }
  return kExitUsage;
}
