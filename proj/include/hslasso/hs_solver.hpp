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

#ifndef HSLASSO_HS_SOLVER_HPP
#define HSLASSO_HS_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>

#include "hslasso/opcount.hpp"
#include "hslasso/problem.hpp"
#include "hslasso/surrogate.hpp"
#include "hslasso/trace.hpp"

namespace hslasso {

enum class InnerStopMode {
  theoretical,  // F_t(beta_bar) - min F_t <= inner_tolerance(...)
  fixed,        // exactly count AGD steps
  gradient,     // ||grad F_t(beta_bar)||_2 <= tol
};

struct InnerStop {
  InnerStopMode mode = InnerStopMode::fixed;
  long count = 50;
  double tol = 1e-8;
};

enum class OuterStopMode {
  oracle,             // F(beta^(k)) - ref.f_min <= epsilon
  theoretical_count,  // exactly outer_iteration_count(...) iterations
  t_floor,            // stop once t_k (1-h) < tau
};

/// Tunables of the homotopy-shrinkage solver.
struct HSConfig {
  std::optional<double> t0;  // unset: searched by find_t0
  double h = 0.1;
  double epsilon = 0.005;
  std::optional<double> B;  // unset: max(10 ||beta^0||_inf, t0)
  double tau = 1e-4;
  InnerStop inner;
  OuterStopMode outer = OuterStopMode::oracle;
  std::optional<ReferenceSolution> ref;  // required for oracle outer stop
  long max_outer = 1000;
  long max_inner = 100000;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// Admissibility test for t: ||M(t) X'y/n||_inf <= t with
/// M(t) = (X'X/n + lambda log(1+t)^2 / (3 t^3) I)^{-1}.
bool t0_condition_holds(const LassoProblem& problem, double t);

/// Smallest t found by doubling from 1 until t0_condition_holds, then 40
/// bisection steps toward the boundary. Throws NumericalFailure after 60
/// doublings. evaluations (optional) receives the number of predicate calls.
double find_t0(const LassoProblem& problem, long* evaluations = nullptr);

/// Solves (X'X/n + 2 lambda log(1+t0)^2 / (3 t0^3) I) beta = X'y/n, the
/// stationarity condition of F_t0 when every |beta_i| <= t0.
Vector initial_beta(const LassoProblem& problem, double t0);

/// lambda p log(1+t_k)^2 / (3B).
double inner_tolerance(double lambda, long p, double B, double t_k);

/// Accelerated gradient state for one inner loop. alpha = sqrt(mu/L),
/// q = (alpha - mu/L)/(1 - mu/L), gamma = alpha/(mu (1-alpha)); in the
/// degenerate case L == mu, q = 0 and alpha = 1 (gamma infinite), which
/// reduces a step to beta_lower - grad/mu.
struct AGDState {
  Vector beta;
  Vector beta_bar;
  double alpha = 1.0;
  double q = 0.0;
  double gamma = 0.0;
  SmoothnessConstants constants;
};

AGDState make_agd_state(const SmoothnessConstants& constants, const Vector& start);

/// One step:
///   lower  = (1-q) beta_bar + q beta
///   beta+  = (beta + gamma mu lower - gamma grad(lower)) / (1 + gamma mu)
///   bar+   = (1-alpha) beta_bar + alpha beta+
AGDState agd_step(const AGDState& state, const std::function<Vector(const Vector&)>& grad);

struct InnerResult {
  Vector beta;  // beta_bar at exit
  long steps = 0;
  bool converged = true;
  double max_abs = 0.0;  // largest |beta_bar_i| seen
};

/// Runs AGD on F_{t_k} from beta_init until config.inner triggers. Every
/// gradient evaluation and vector update is charged to counter. B enters
/// through the strong-convexity modulus.
InnerResult inner_solve(const LassoProblem& problem, double t_k, const Vector& beta_init, const HSConfig& config,
                        double B, OpCounter& counter);

/// Damped Newton on F_t (which is C^2 and strongly convex) to gradient
/// infinity-norm grad_tol. Uncharged; used as the auxiliary oracle for
/// min F_t and for surrogate minimizers in diagnostics.
struct SurrogateMinimum {
  Vector beta;
  double value = 0.0;
  double grad_norm = 0.0;
};
SurrogateMinimum minimize_surrogate(const LassoProblem& problem, double t, const Vector& start,
                                    double grad_tol = 1e-12, long max_iter = 500);

/// ceil(-log(lambda p t0 (2B+1) / epsilon) / log(1-h)), clamped at 0.
long outer_iteration_count(double lambda, long p, double t0, double B, double h, double epsilon);

/// Extra information about an HS run beyond the trace rows.
struct HSRunInfo {
  double t0 = 0.0;
  double B = 0.0;
  bool t0_searched = false;
  std::string init_rule;  // coefficient used for the ridge start
  long planned_outer = -1;  // theoretical_count mode only
};

/// Homotopy-shrinkage: beta^0 from initial_beta, then for k = 1, 2, ...:
/// t_k = t0 (1-h)^k, warm-started inner_solve on F_{t_k}, record row k,
/// until config.outer triggers. Row 0 holds beta^0 at t0.
SolverTrace hs_solve(const LassoProblem& problem, const HSConfig& config, OpCounter& counter,
                     HSRunInfo* info = nullptr);

}  // namespace hslasso

#endif  // HSLASSO_HS_SOLVER_HPP
