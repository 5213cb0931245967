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

#include "hslasso/hs_solver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hslasso {

namespace {

std::uint64_t eigen_setup_cost(std::uint64_t p) { return 4 * p * p * p / 3; }

// Per-coordinate cost of f_t'(x): one branch comparison, and at most three
// mults and one add on the outer branch.
void charge_surrogate_gradient(OpCounter& counter, std::uint64_t p) {
  counter.charge_matvec(p, p);
  counter.charge_scalar(ScalarOp::add, p);  // - X'y/n
  counter.charge_scalar(ScalarOp::comparison, p);
  counter.charge_scalar(ScalarOp::mult, 3 * p);
  counter.charge_scalar(ScalarOp::add, p);
  counter.charge_axpy(p);  // + lambda f_t'
}

void charge_agd_vector_work(OpCounter& counter, std::uint64_t p) {
  counter.charge_scalar(ScalarOp::mult, 2 * p);  // lower
  counter.charge_scalar(ScalarOp::add, p);
  counter.charge_scalar(ScalarOp::mult, 3 * p);  // prox closed form
  counter.charge_scalar(ScalarOp::add, 2 * p);
  counter.charge_scalar(ScalarOp::mult, 2 * p);  // bar
  counter.charge_scalar(ScalarOp::add, p);
}

}  // namespace

void HSConfig::validate() const {
  if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("HSConfig: h must lie in (0, 1)");
  if (!(epsilon > 0.0)) throw std::invalid_argument("HSConfig: epsilon must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("HSConfig: tau must be positive");
  if (t0 && !(*t0 > 0.0)) throw std::invalid_argument("HSConfig: t0 must be positive");
  if (t0 && !(tau < *t0)) throw std::invalid_argument("HSConfig: tau must be below t0");
  if (B && !(*B > 0.0)) throw std::invalid_argument("HSConfig: B must be positive");
  if (max_outer < 1 || max_inner < 1) throw std::invalid_argument("HSConfig: iteration caps must be >= 1");
  if (inner.mode == InnerStopMode::fixed && inner.count < 1) {
    throw std::invalid_argument("HSConfig: fixed inner count must be >= 1");
  }
  if (inner.mode == InnerStopMode::gradient && !(inner.tol > 0.0)) {
    throw std::invalid_argument("HSConfig: gradient tolerance must be positive");
  }
  if (outer == OuterStopMode::oracle && !ref) {
    throw std::invalid_argument("HSConfig: oracle outer stop needs a reference solution");
  }
}

bool t0_condition_holds(const LassoProblem& problem, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("t0_condition_holds: t must be positive");
  const double l = std::log1p(t);
  const double shift = problem.lambda() * l * l / (3.0 * t * t * t);
  Matrix A = problem.gram();
  A.diagonal().array() += shift;
  const Eigen::LLT<Matrix> llt(A);
  if (llt.info() != Eigen::Success) return false;
  const Vector beta = llt.solve(problem.xty());
  if (!beta.allFinite()) return false;
  return beta.lpNorm<Eigen::Infinity>() <= t;
}

double find_t0(const LassoProblem& problem, long* evaluations) {
  long evals = 0;
  auto holds = [&](double t) {
    ++evals;
    return t0_condition_holds(problem, t);
  };
  double lo = 0.0;
  double hi = 1.0;
  if (!holds(hi)) {
    bool found = false;
    for (int d = 0; d < 60; ++d) {
      lo = hi;
      hi *= 2.0;
      if (holds(hi)) {
        found = true;
        break;
      }
    }
    if (!found) throw NumericalFailure("find_t0: condition not met after 60 doublings");
  }
  for (int i = 0; i < 40; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (holds(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (evaluations) *evaluations = evals;
  return hi;
}

Vector initial_beta(const LassoProblem& problem, double t0) {
  if (!(t0 > 0.0)) throw std::invalid_argument("initial_beta: t0 must be positive");
  const double l = std::log1p(t0);
  const double shift = 2.0 * problem.lambda() * l * l / (3.0 * t0 * t0 * t0);
  Matrix A = problem.gram();
  A.diagonal().array() += shift;
  const Eigen::LLT<Matrix> llt(A);
  if (llt.info() != Eigen::Success) throw NumericalFailure("initial_beta: ridge system is not positive definite");
  Vector beta = llt.solve(problem.xty());
  if (!beta.allFinite()) throw NumericalFailure("initial_beta: non-finite solution");
  return beta;
}

double inner_tolerance(double lambda, long p, double B, double t_k) {
  const double l = std::log1p(t_k);
  return lambda * static_cast<double>(p) * l * l / (3.0 * B);
}

AGDState make_agd_state(const SmoothnessConstants& constants, const Vector& start) {
  if (!(constants.mu > 0.0) || !(constants.L > 0.0)) {
    throw std::invalid_argument("make_agd_state: L and mu must be positive");
  }
  AGDState s;
  s.beta = start;
  s.beta_bar = start;
  s.constants = constants;
  const double ratio = constants.mu / constants.L;
  if (ratio >= 1.0) {
    s.alpha = 1.0;
    s.q = 0.0;
    s.gamma = std::numeric_limits<double>::infinity();
  } else {
    s.alpha = std::sqrt(ratio);
    s.q = (s.alpha - ratio) / (1.0 - ratio);
    s.gamma = s.alpha / (constants.mu * (1.0 - s.alpha));
  }
  return s;
}

AGDState agd_step(const AGDState& state, const std::function<Vector(const Vector&)>& grad) {
  AGDState next = state;
  const Vector lower = (1.0 - state.q) * state.beta_bar + state.q * state.beta;
  const Vector g = grad(lower);
  const double mu = state.constants.mu;
  if (std::isinf(state.gamma)) {
    next.beta = lower - g / mu;
  } else {
    const double gm = state.gamma * mu;
    next.beta = (state.beta + gm * lower - state.gamma * g) / (1.0 + gm);
  }
  next.beta_bar = (1.0 - state.alpha) * state.beta_bar + state.alpha * next.beta;
  return next;
}

SurrogateMinimum minimize_surrogate(const LassoProblem& problem, double t, const Vector& start, double grad_tol,
                                    long max_iter) {
  const SurrogateSpec spec(t);
  SurrogateMinimum out;
  Vector beta = start;
  double f = surrogate_objective(problem, spec, beta);
  for (long it = 0; it < max_iter; ++it) {
    const Vector g = surrogate_gradient(problem, spec, beta);
    out.grad_norm = g.lpNorm<Eigen::Infinity>();
    if (out.grad_norm <= grad_tol) break;
    Matrix H = problem.gram();
    H.diagonal() += problem.lambda() * ft_hess_diag(spec, beta);
    const Eigen::LLT<Matrix> llt(H);
    if (llt.info() != Eigen::Success) throw NumericalFailure("minimize_surrogate: Hessian factorization failed");
    const Vector d = -llt.solve(g);
    const double slope = g.dot(d);
    if (-slope < 1e-24) {
      // inside rounding range of the minimum: a full step cannot be verified by descent
      beta += d;
      f = surrogate_objective(problem, spec, beta);
      continue;
    }
    double s = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      const Vector trial = beta + s * d;
      const double ft = surrogate_objective(problem, spec, trial);
      if (ft <= f + 1e-4 * s * slope) {
        beta = trial;
        f = ft;
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) break;
  }
  out.grad_norm = surrogate_gradient(problem, spec, beta).lpNorm<Eigen::Infinity>();
  out.value = surrogate_objective(problem, spec, beta);
  out.beta = std::move(beta);
  return out;
}

InnerResult inner_solve(const LassoProblem& problem, double t_k, const Vector& beta_init, const HSConfig& config,
                        double B, OpCounter& counter) {
  if (!(t_k >= config.tau)) throw std::invalid_argument("inner_solve: t_k must be >= tau");
  const SurrogateSpec spec(t_k);
  const auto p = static_cast<std::uint64_t>(problem.p());
  AGDState state = make_agd_state(smoothness_constants(problem, spec, B), beta_init);
  counter.charge_scalar(ScalarOp::transcendental, 2);  // log1p(t), sqrt(mu/L)
  counter.charge_scalar(ScalarOp::mult, 12);
  counter.charge_scalar(ScalarOp::add, 6);

  const auto grad = [&](const Vector& b) {
    charge_surrogate_gradient(counter, p);
    return surrogate_gradient(problem, spec, b);
  };

  InnerResult out;
  out.max_abs = beta_init.lpNorm<Eigen::Infinity>();
  auto step = [&] {
    state = agd_step(state, grad);
    charge_agd_vector_work(counter, p);
    ++out.steps;
    out.max_abs = std::max(out.max_abs, state.beta_bar.lpNorm<Eigen::Infinity>());
  };

  switch (config.inner.mode) {
    case InnerStopMode::fixed: {
      const long n = std::min(config.inner.count, config.max_inner);
      out.converged = config.inner.count <= config.max_inner;
      for (long s = 0; s < n; ++s) step();
      break;
    }
    case InnerStopMode::gradient: {
      out.converged = false;
      for (;;) {
        const double gnorm = grad(state.beta_bar).norm();
        counter.charge_scalar(ScalarOp::mult, p);
        counter.charge_scalar(ScalarOp::add, p - 1);
        counter.charge_scalar(ScalarOp::transcendental);
        counter.charge_scalar(ScalarOp::comparison);
        if (gnorm <= config.inner.tol) {
          out.converged = true;
          break;
        }
        if (out.steps >= config.max_inner) break;
        step();
      }
      break;
    }
    case InnerStopMode::theoretical: {
      // The minimum of F_{t_k} comes from an uncharged auxiliary Newton solve.
      const double f_min_k = minimize_surrogate(problem, t_k, beta_init).value;
      const double target = inner_tolerance(problem.lambda(), problem.p(), B, t_k);
      out.converged = false;
      for (;;) {
        if (surrogate_objective(problem, spec, state.beta_bar) - f_min_k <= target) {
          out.converged = true;
          break;
        }
        if (out.steps >= config.max_inner) break;
        step();
      }
      break;
    }
  }
  out.beta = std::move(state.beta_bar);
  return out;
}

long outer_iteration_count(double lambda, long p, double t0, double B, double h, double epsilon) {
  if (!(h > 0.0 && h < 1.0)) throw std::invalid_argument("outer_iteration_count: h must lie in (0, 1)");
  const double ratio = lambda * static_cast<double>(p) * t0 * (2.0 * B + 1.0) / epsilon;
  const double k = std::ceil(-std::log(ratio) / std::log1p(-h));
  return k > 0.0 ? static_cast<long>(k) : 0L;
}

SolverTrace hs_solve(const LassoProblem& problem, const HSConfig& config, OpCounter& counter, HSRunInfo* info) {
  config.validate();
  const auto p = static_cast<std::uint64_t>(problem.p());
  counter.charge_setup(gram_setup_cost(problem.n(), p) + eigen_setup_cost(p));

  HSRunInfo run;
  if (config.t0) {
    run.t0 = *config.t0;
  } else {
    long evals = 0;
    run.t0 = find_t0(problem, &evals);
    run.t0_searched = true;
    OpCounter search;
    for (long i = 0; i < evals; ++i) search.charge_cholesky_solve(p);
    counter.charge_setup(search.total());
    if (!(config.tau < run.t0)) throw std::invalid_argument("hs_solve: searched t0 is not above tau");
  }
  const double t0 = run.t0;
  run.init_rule = "2*lambda*log(1+t0)^2/(3*t0^3)";

  Vector beta = initial_beta(problem, t0);
  counter.charge_cholesky_solve(p);
  counter.charge_scalar(ScalarOp::add, p);
  counter.charge_scalar(ScalarOp::transcendental);
  counter.charge_scalar(ScalarOp::mult, 6);

  run.B = config.B.value_or(std::max(10.0 * beta.lpNorm<Eigen::Infinity>(), t0));
  const double B = run.B;

  SolverTrace trace;
  trace.method = Method::hs;
  auto record = [&](long k, double t_k, long inner, const Vector& b) {
    TraceRecord r;
    r.k = k;
    r.t_k = t_k;
    r.inner_iters = inner;
    r.F = lasso_objective(problem, b);
    r.F_t = surrogate_objective(problem, t_k, b);
    r.ops = counter.snapshot();
    trace.records.push_back(r);
    trace.max_abs_iterate = std::max(trace.max_abs_iterate, b.lpNorm<Eigen::Infinity>());
  };
  record(0, t0, 0, beta);

  if (config.outer == OuterStopMode::theoretical_count) {
    run.planned_outer = outer_iteration_count(problem.lambda(), problem.p(), t0, B, config.h, config.epsilon);
  }

  bool inner_ok = true;
  bool finished = false;
  for (long k = 1;; ++k) {
    if (config.outer == OuterStopMode::oracle &&
        trace.records.back().F - config.ref->f_min <= config.epsilon) {
      finished = true;
      break;
    }
    if (config.outer == OuterStopMode::theoretical_count && k > run.planned_outer) {
      finished = true;
      break;
    }
    const double t_k = t0 * std::pow(1.0 - config.h, static_cast<double>(k));
    if (config.outer == OuterStopMode::t_floor && t_k < config.tau) {
      finished = true;
      break;
    }
    if (k > config.max_outer) break;
    if (t_k < config.tau) break;  // the inner problem is undefined below tau

    const InnerResult inner = inner_solve(problem, t_k, beta, config, B, counter);
    inner_ok = inner_ok && inner.converged;
    trace.max_abs_iterate = std::max(trace.max_abs_iterate, inner.max_abs);
    beta = inner.beta;
    record(k, t_k, inner.steps, beta);
  }

  trace.bound_violated = trace.max_abs_iterate > B;
  trace.final_beta = std::move(beta);
  trace.converged = finished && inner_ok;
  if (info) *info = run;
  return trace;
}

}  // namespace hslasso
