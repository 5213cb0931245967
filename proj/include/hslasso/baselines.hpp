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

#ifndef HSLASSO_BASELINES_HPP
#define HSLASSO_BASELINES_HPP

#include <optional>

#include "hslasso/opcount.hpp"
#include "hslasso/problem.hpp"
#include "hslasso/trace.hpp"

namespace hslasso {

/// Which smooth penalty the smooth-lasso solver uses.
///   literal:  phi(u) = (2/u) log(1 + e^{a u}) - u, singular at u = 0
///   softplus: phi(u) = (2/a) log(1 + e^{a u}) - u = (1/a) [log(1+e^{au}) + log(1+e^{-au})]
enum class SmoothPenalty { literal, softplus };

struct BaselineConfig {
  Method method = Method::ista;
  Vector beta0;
  double epsilon = 1e-3;
  long max_iters = 100000;
  /// Smoothing parameter; required iff method == Method::sl.
  std::optional<double> sl_alpha;
  SmoothPenalty sl_penalty = SmoothPenalty::softplus;
  ReferenceSolution ref;
};

/// Proximal operator of alpha|.|.
double soft_threshold(double x, double alpha);

/// Each solver stops at the first iterate with F - ref.f_min <= epsilon or
/// after max_iters iterations (converged = false). Objective evaluations
/// for the stopping test are measurement and are not charged.
SolverTrace ista_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter);
SolverTrace fista_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter);
/// One trace row per full cyclic sweep j = 1..p. Throws std::invalid_argument
/// if a column of X is identically zero.
SolverTrace cd_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter);
SolverTrace sl_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter);

/// Dispatches on config.method; Method::hs is rejected.
SolverTrace baseline_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter);

/// Smooth penalty derivative lambda^{-1} * v_i for one coordinate. Returns
/// true in guarded when the literal form was evaluated at |u| < 1e-12.
double smooth_penalty_value(SmoothPenalty kind, double alpha, double u);
double smooth_penalty_grad(SmoothPenalty kind, double alpha, double u, bool* guarded = nullptr);

/// Right-hand side of the published convergence bound for the given method
/// after k iterations started from beta0:
///   ISTA   L d^2 / (2k)
///   FISTA  2 L d^2 / (k+1)^2
///   CD     4 L (1+p) d^2 / (k + 8/p)
///   SL     4 d^2 L / k^2 + 4 sqrt(2 lambda n log 2) d / k
/// with L = eigmax(X'X/n) and d = ||beta0 - beta_hat||_2. Throws
/// std::invalid_argument for Method::hs, or for k < 1 except with CD.
double theoretical_bound(Method method, long k, const LassoProblem& problem, const Vector& beta0,
                         const ReferenceSolution& ref);

}  // namespace hslasso

#endif  // HSLASSO_BASELINES_HPP
