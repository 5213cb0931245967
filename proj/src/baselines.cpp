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

#include "hslasso/baselines.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hslasso {

namespace {

constexpr double kGuard = 1e-12;

void check_config(const LassoProblem& problem, const BaselineConfig& config) {
  if (config.beta0.size() != problem.p()) throw std::invalid_argument("baseline: beta0 length must equal p");
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("baseline: epsilon must be positive");
  if (config.max_iters < 1) throw std::invalid_argument("baseline: max_iters must be >= 1");
  if (!std::isfinite(config.ref.f_min)) throw std::invalid_argument("baseline: reference f_min must be finite");
  if ((config.method == Method::sl) != config.sl_alpha.has_value()) {
    throw std::invalid_argument("baseline: sl_alpha is required for SL and only for SL");
  }
  if (config.sl_alpha && !(*config.sl_alpha > 0.0)) throw std::invalid_argument("baseline: sl_alpha must be positive");
}

// Records iterate k and reports whether the stopping test is met.
class Recorder {
 public:
  Recorder(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter, Method m)
      : problem_(problem), config_(config), counter_(counter) {
    trace_.method = m;
  }

  bool record(long k, const Vector& beta) {
    TraceRecord r;
    r.k = k;
    r.F = lasso_objective(problem_, beta);
    r.F_t = r.F;
    r.ops = counter_.snapshot();
    trace_.records.push_back(r);
    trace_.max_abs_iterate = std::max(trace_.max_abs_iterate, beta.lpNorm<Eigen::Infinity>());
    return r.F - config_.ref.f_min <= config_.epsilon;
  }

  SolverTrace finish(Vector beta, bool converged) {
    trace_.final_beta = std::move(beta);
    trace_.converged = converged;
    return std::move(trace_);
  }

  SolverTrace& trace() { return trace_; }

 private:
  const LassoProblem& problem_;
  const BaselineConfig& config_;
  OpCounter& counter_;
  SolverTrace trace_;
};

std::uint64_t eigen_setup_cost(std::uint64_t p) { return 4 * p * p * p / 3; }

// beta_next = S(z - (G z - X'y/n)/L, lambda/L), charged as one p x p matvec,
// three length-p vector operations and p soft-threshold calls.
void prox_step(const LassoProblem& problem, const Vector& z, double inv_L, double thresh, Vector& out,
               OpCounter& counter) {
  const Index p = problem.p();
  Vector g = problem.gram() * z;
  counter.charge_matvec(p, p);
  g -= problem.xty();
  counter.charge_scalar(ScalarOp::add, p);
  out.resize(p);
  for (Index j = 0; j < p; ++j) out[j] = soft_threshold(z[j] - inv_L * g[j], thresh);
  counter.charge_axpy(p);
  counter.charge_soft_threshold(p);
}

double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }
double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

double soft_threshold(double x, double alpha) {
  if (x >= alpha) return x - alpha;
  if (x <= -alpha) return x + alpha;
  return 0.0;
}

double smooth_penalty_value(SmoothPenalty kind, double alpha, double u) {
  if (kind == SmoothPenalty::softplus) return 2.0 / alpha * softplus(alpha * u) - u;
  if (std::abs(u) < kGuard) return std::numeric_limits<double>::infinity();
  return 2.0 / u * softplus(alpha * u) - u;
}

double smooth_penalty_grad(SmoothPenalty kind, double alpha, double u, bool* guarded) {
  if (guarded) *guarded = false;
  if (kind == SmoothPenalty::softplus) return 2.0 * logistic(alpha * u) - 1.0;
  if (std::abs(u) < kGuard) {
    // Both one-sided limits carry the same divergent term -2 log 2 / u^2;
    // substitute the finite part of the expansion, alpha^2/4 - 1.
    if (guarded) *guarded = true;
    return 0.25 * alpha * alpha - 1.0;
  }
  return -2.0 / (u * u) * softplus(alpha * u) + 2.0 * alpha * logistic(alpha * u) / u - 1.0;
}

SolverTrace ista_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter) {
  check_config(problem, config);
  const auto p = static_cast<std::uint64_t>(problem.p());
  counter.charge_setup(gram_setup_cost(problem.n(), p) + eigen_setup_cost(p));
  const double L = problem.gram_eig_max();
  if (!(L > 0.0)) throw std::invalid_argument("ista: X'X/n has no positive eigenvalue");
  const double inv_L = 1.0 / L;
  const double thresh = problem.lambda() * inv_L;
  counter.charge_scalar(ScalarOp::mult, 2);

  Recorder rec(problem, config, counter, Method::ista);
  Vector beta = config.beta0;
  Vector next;
  bool done = rec.record(0, beta);
  for (long k = 1; !done && k <= config.max_iters; ++k) {
    prox_step(problem, beta, inv_L, thresh, next, counter);
    beta.swap(next);
    done = rec.record(k, beta);
  }
  return rec.finish(std::move(beta), done);
}

SolverTrace fista_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter) {
  check_config(problem, config);
  const auto p = static_cast<std::uint64_t>(problem.p());
  counter.charge_setup(gram_setup_cost(problem.n(), p) + eigen_setup_cost(p));
  const double L = problem.gram_eig_max();
  if (!(L > 0.0)) throw std::invalid_argument("fista: X'X/n has no positive eigenvalue");
  const double inv_L = 1.0 / L;
  const double thresh = problem.lambda() * inv_L;
  counter.charge_scalar(ScalarOp::mult, 2);

  Recorder rec(problem, config, counter, Method::fista);
  Vector beta = config.beta0;
  Vector prev = beta;
  Vector aux = beta;
  double t = 1.0;
  bool done = rec.record(0, beta);
  for (long k = 1; !done && k <= config.max_iters; ++k) {
    prox_step(problem, aux, inv_L, thresh, beta, counter);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double w = (t - 1.0) / t_next;
    counter.charge_scalar(ScalarOp::mult, 4);
    counter.charge_scalar(ScalarOp::add, 3);
    counter.charge_scalar(ScalarOp::transcendental, 1);
    aux = beta + w * (beta - prev);
    counter.charge_scalar(ScalarOp::add, p);
    counter.charge_axpy(p);
    prev = beta;
    t = t_next;
    done = rec.record(k, beta);
  }
  return rec.finish(std::move(beta), done);
}

SolverTrace cd_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter) {
  check_config(problem, config);
  const Index p = problem.p();
  const Matrix& G = problem.gram();
  for (Index j = 0; j < p; ++j) {
    if (!(G(j, j) > 0.0)) throw std::invalid_argument("cd: column " + std::to_string(j) + " of X is zero");
  }
  counter.charge_setup(gram_setup_cost(problem.n(), p));

  Recorder rec(problem, config, counter, Method::cd);
  Vector beta = config.beta0;
  Vector g_beta = G * beta;  // (X'X/n) beta, kept current one coordinate at a time
  counter.charge_matvec(p, p);
  const double lam = problem.lambda();
  bool done = rec.record(0, beta);
  for (long k = 1; !done && k <= config.max_iters; ++k) {
    for (Index j = 0; j < p; ++j) {
      const double d = G(j, j);
      const double partial = problem.xty()[j] - (g_beta[j] - d * beta[j]);
      const double updated = soft_threshold(partial, lam) / d;
      const double delta = updated - beta[j];
      counter.charge_scalar(ScalarOp::mult, 2);
      counter.charge_scalar(ScalarOp::add, 3);
      counter.charge_soft_threshold();
      counter.charge_scalar(ScalarOp::comparison);
      if (delta != 0.0) {
        g_beta += delta * G.col(j);
        counter.charge_axpy(p);
        beta[j] = updated;
      }
    }
    done = rec.record(k, beta);
  }
  return rec.finish(std::move(beta), done);
}

SolverTrace sl_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter) {
  check_config(problem, config);
  const auto p = static_cast<std::uint64_t>(problem.p());
  counter.charge_setup(gram_setup_cost(problem.n(), p) + eigen_setup_cost(p));
  const double alpha = *config.sl_alpha;
  const double lam = problem.lambda();
  // sigma_max(X/sqrt(n))^2 is the largest eigenvalue of X'X/n.
  const double step = 1.0 / (problem.gram_eig_max() + lam * alpha / 2.0);
  counter.charge_scalar(ScalarOp::mult, 3);
  counter.charge_scalar(ScalarOp::add, 1);

  Recorder rec(problem, config, counter, Method::sl);
  Vector beta = config.beta0;
  Vector prev = beta;
  Vector w(problem.p());
  Vector grad(problem.p());
  bool done = rec.record(0, beta);
  for (long k = 0; !done && k < config.max_iters; ++k) {
    const double momentum = static_cast<double>(k - 2) / static_cast<double>(k + 1);
    counter.charge_scalar(ScalarOp::add, 2);
    counter.charge_scalar(ScalarOp::mult, 1);
    w = beta + momentum * (beta - prev);
    counter.charge_scalar(ScalarOp::add, p);
    counter.charge_axpy(p);

    grad.noalias() = problem.gram() * w;
    counter.charge_matvec(p, p);
    grad -= problem.xty();
    counter.charge_scalar(ScalarOp::add, p);
    for (Index i = 0; i < problem.p(); ++i) {
      bool guarded = false;
      grad[i] += lam * smooth_penalty_grad(config.sl_penalty, alpha, w[i], &guarded);
      if (guarded) ++rec.trace().guard_events;
    }
    if (config.sl_penalty == SmoothPenalty::literal) {
      // softplus, logistic (two exp/log1p), and the rational combination
      counter.charge_scalar(ScalarOp::transcendental, 2 * p);
      counter.charge_scalar(ScalarOp::mult, 7 * p);
      counter.charge_scalar(ScalarOp::add, 3 * p);
    } else {
      counter.charge_scalar(ScalarOp::transcendental, p);
      counter.charge_scalar(ScalarOp::mult, 3 * p);
      counter.charge_scalar(ScalarOp::add, 2 * p);
    }
    counter.charge_scalar(ScalarOp::comparison, p);
    counter.charge_axpy(p);  // += lambda * v

    prev = beta;
    beta = w - step * grad;
    counter.charge_axpy(p);
    done = rec.record(k + 1, beta);
  }
  return rec.finish(std::move(beta), done);
}

SolverTrace baseline_solve(const LassoProblem& problem, const BaselineConfig& config, OpCounter& counter) {
  switch (config.method) {
    case Method::ista: return ista_solve(problem, config, counter);
    case Method::fista: return fista_solve(problem, config, counter);
    case Method::cd: return cd_solve(problem, config, counter);
    case Method::sl: return sl_solve(problem, config, counter);
    case Method::hs: break;
  }
  throw std::invalid_argument("baseline_solve: HS is not a baseline method");
}

double theoretical_bound(Method method, long k, const LassoProblem& problem, const Vector& beta0,
                         const ReferenceSolution& ref) {
  if (k < 1 && method != Method::cd) throw std::invalid_argument("theoretical_bound: k must be >= 1");
  if (k < 0) throw std::invalid_argument("theoretical_bound: k must be >= 0");
  const double L = problem.gram_eig_max();
  const double d2 = (beta0 - ref.beta_hat).squaredNorm();
  const double kk = static_cast<double>(k);
  const double p = static_cast<double>(problem.p());
  switch (method) {
    case Method::ista: return L * d2 / (2.0 * kk);
    case Method::fista: return 2.0 * L * d2 / ((kk + 1.0) * (kk + 1.0));
    case Method::cd: return 4.0 * L * (1.0 + p) * d2 / (kk + 8.0 / p);
    case Method::sl: {
      const double n = static_cast<double>(problem.n());
      return 4.0 * d2 * L / (kk * kk) +
             4.0 * std::sqrt(2.0 * problem.lambda() * n * std::numbers::ln2) * std::sqrt(d2) / kk;
    }
    case Method::hs: break;
  }
  throw std::invalid_argument("theoretical_bound: no published bound for HS");
}

}  // namespace hslasso
