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

#include "hslasso/bench.hpp"

#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hslasso/baselines.hpp"
#include "hslasso/hs_solver.hpp"

namespace hslasso {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

BenchCell run_cell(const BenchmarkGrid& grid, const LassoProblem& problem, const ReferenceSolution& ref,
                   Method method) {
  const double tightest = grid.epsilons.back();
  OpCounter counter;
  SolverTrace trace;
  if (method == Method::hs) {
    HSConfig c;
    c.t0 = grid.t0;
    c.h = grid.h;
    c.epsilon = tightest;
    c.inner.mode = InnerStopMode::fixed;
    c.inner.count = grid.inner_fixed;
    c.ref = ref;
    trace = hs_solve(problem, c, counter);
  } else {
    BaselineConfig c;
    c.method = method;
    c.beta0 = Vector::Constant(problem.p(), grid.baseline_start);
    c.epsilon = tightest;
    c.max_iters = grid.max_iters;
    if (method == Method::sl) c.sl_alpha = grid.sl_alpha;
    c.ref = ref;
    trace = baseline_solve(problem, c, counter);
  }
  BenchCell cell;
  cell.method = method;
  cell.converged = trace.converged;
  cell.rows = trace.records.size();
  for (double eps : grid.epsilons) {
    const auto hit = first_hit(trace, ref.f_min, eps);
    if (hit) {
      cell.hits.emplace_back(trace.records[*hit].ops);
      cell.gaps.emplace_back(trace.records[*hit].F - ref.f_min);
    } else {
      cell.hits.emplace_back(std::nullopt);
      cell.gaps.emplace_back(std::nullopt);
    }
  }
  return cell;
}

}  // namespace

void BenchmarkGrid::validate() const {
  if (scenarios.empty()) throw std::invalid_argument("bench: no scenarios");
  if (methods.empty()) throw std::invalid_argument("bench: no methods");
  if (epsilons.empty()) throw std::invalid_argument("bench: no epsilons");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw std::invalid_argument("bench: epsilons must be positive");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw std::invalid_argument("bench: epsilons must be strictly descending");
    }
  }
  for (const auto& s : scenarios) s.spec.validate();
  if (inner_fixed < 1) throw std::invalid_argument("bench: inner_fixed must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("bench: max_iters must be >= 1");
}

BenchmarkGrid default_grid(std::uint64_t seed) {
  BenchmarkGrid g;
  for (const char* name : {"sim1", "sim2"}) {
    for (long p : {20L, 80L}) g.scenarios.push_back({name, scenario(name, 50, p, seed)});
  }
  g.epsilons = kDefaultEpsilons;
  g.methods = {Method::ista, Method::fista, Method::hs};
  return g;
}

BenchResult run_benchmark(const BenchmarkGrid& grid, unsigned threads) {
  grid.validate();
  BenchResult result;
  result.grid = grid;

  std::vector<LassoProblem> problems;
  std::vector<ReferenceSolution> refs;
  for (const auto& s : grid.scenarios) {
    problems.push_back(generate(s.spec, grid.lambda).problem);
    refs.push_back(reference_minimum(problems.back()));
    ScenarioResult sr;
    sr.scenario = s;
    sr.f_min = refs.back().f_min;
    sr.cells.resize(grid.methods.size());
    result.scenarios.push_back(std::move(sr));
  }

  const std::size_t jobs = grid.scenarios.size() * grid.methods.size();
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs;) {
      const std::size_t s = j / grid.methods.size();
      const std::size_t m = j % grid.methods.size();
      try {
        result.scenarios[s].cells[m] = run_cell(grid, problems[s], refs[s], grid.methods[m]);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

void write_table_csv(std::ostream& out, const BenchResult& r) {
  out << "scenario,n,p,seed,method";
  for (double e : r.grid.epsilons) out << ",eps_" << fmt12(e);
  out << '\n';
  for (const auto& s : r.scenarios) {
    for (const auto& c : s.cells) {
      out << s.scenario.name << ',' << s.scenario.spec.n << ',' << s.scenario.spec.p << ',' << s.scenario.spec.seed
          << ',' << method_name(c.method);
      for (const auto& h : c.hits) {
        out << ',';
        if (h) out << u64(h->total());
      }
      out << '\n';
    }
  }
}

void write_curve_csv(std::ostream& out, const BenchResult& r) {
  out << "scenario,n,p,seed,method,epsilon,log_inv_eps,gap,ops_total,ops_setup,ops_mult,ops_add,ops_trans,ops_cmp,"
         "log_ops\n";
  for (const auto& s : r.scenarios) {
    for (const auto& c : s.cells) {
      for (std::size_t i = 0; i < r.grid.epsilons.size(); ++i) {
        if (!c.hits[i]) continue;
        const OpSnapshot& o = *c.hits[i];
        const double eps = r.grid.epsilons[i];
        out << s.scenario.name << ',' << s.scenario.spec.n << ',' << s.scenario.spec.p << ',' << s.scenario.spec.seed
            << ',' << method_name(c.method) << ',' << fmt12(eps) << ',' << fmt17(std::log(1.0 / eps)) << ','
            << fmt12(*c.gaps[i]) << ',' << u64(o.total()) << ',' << u64(o.setup_ops) << ',' << u64(o.mults) << ','
            << u64(o.adds) << ',' << u64(o.transcendentals) << ',' << u64(o.comparisons) << ','
            << fmt17(std::log(static_cast<double>(o.total()))) << '\n';
      }
    }
  }
}

nlohmann::json bench_metadata(const BenchResult& r) {
  const auto& g = r.grid;
  nlohmann::json methods = nlohmann::json::array();
  for (Method m : g.methods) methods.push_back(method_name(m));
  nlohmann::json scenarios = nlohmann::json::array();
  for (const auto& s : r.scenarios) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : s.cells) {
      cells.push_back({{"method", method_name(c.method)}, {"converged", c.converged}, {"trace_rows", c.rows}});
    }
    scenarios.push_back({{"name", s.scenario.name},
                         {"n", s.scenario.spec.n},
                         {"p", s.scenario.spec.p},
                         {"rho", s.scenario.spec.rho},
                         {"snr", s.scenario.spec.snr},
                         {"pattern", pattern_name(s.scenario.spec.pattern)},
                         {"s", s.scenario.spec.s},
                         {"seed", s.scenario.spec.seed},
                         {"f_min", fmt17(s.f_min)},
                         {"cells", cells}});
  }
  return {{"epsilons", g.epsilons},
          {"methods", methods},
          {"lambda", g.lambda},
          {"hs", {{"t0", g.t0}, {"h", g.h}, {"inner_mode", "fixed"}, {"inner_fixed", g.inner_fixed}}},
          {"sl_alpha", g.sl_alpha},
          {"sl_penalty", "softplus"},
          {"baseline_beta0", g.baseline_start},
          {"max_iters", g.max_iters},
          {"reference_tolerance", kReferenceTolerance},
          {"rng", kRngIdentifier},
          {"ops_columns", "main bucket; setup reported separately as ops_setup"},
          {"scenarios", scenarios}};
}

nlohmann::json bench_to_json(const BenchResult& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : r.scenarios) {
    for (const auto& c : s.cells) {
      nlohmann::json ops = nlohmann::json::array();
      for (const auto& h : c.hits) ops.push_back(h ? nlohmann::json(h->total()) : nlohmann::json(nullptr));
      rows.push_back({{"scenario", s.scenario.name},
                      {"n", s.scenario.spec.n},
                      {"p", s.scenario.spec.p},
                      {"seed", s.scenario.spec.seed},
                      {"method", method_name(c.method)},
                      {"ops", ops}});
    }
  }
  return {{"epsilons", r.grid.epsilons}, {"rows", rows}, {"metadata", bench_metadata(r)}};
}

double loglog_slope(const std::vector<double>& epsilons, const std::vector<double>& ops) {
  if (epsilons.size() != ops.size() || epsilons.size() < 2) {
    throw std::invalid_argument("loglog_slope: need at least two matched points");
  }
  const auto m = static_cast<double>(epsilons.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    sx += std::log(1.0 / epsilons[i]);
    sy += std::log(ops[i]);
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    const double dx = std::log(1.0 / epsilons[i]) - mx;
    sxy += dx * (std::log(ops[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw std::invalid_argument("loglog_slope: epsilons are all equal");
  return sxy / sxx;
}

}  // namespace hslasso
