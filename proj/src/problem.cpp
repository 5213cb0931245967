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

#include "hslasso/problem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hslasso {

namespace {

void require_length(const LassoProblem& problem, const Vector& beta) {
  if (beta.size() != problem.p()) {
    std::ostringstream msg;
    msg << "beta has length " << beta.size() << ", expected p = " << problem.p();
    throw std::invalid_argument(msg.str());
  }
}

double soft(double x, double a) {
  if (x >= a) return x - a;
  if (x <= -a) return x + a;
  return 0.0;
}

struct OracleRun {
  Vector beta;
  double residual = 0.0;
  bool reached = false;
};

constexpr long kOracleMaxIters = 4'000'000;

// Proximal gradient with Nesterov momentum and gradient-based adaptive
// restart; the restart makes the tail linearly convergent so that residuals
// near 1e-10 are reachable.
OracleRun restarted_fista(const LassoProblem& problem, double tol) {
  const Index p = problem.p();
  const double L = std::max(problem.gram_eig_max(), 1e-300);
  const double thresh = problem.lambda() / L;
  Vector beta = Vector::Zero(p);
  Vector prev = beta;
  Vector aux = beta;
  double t = 1.0;
  OracleRun run;
  for (long it = 0; it < kOracleMaxIters; ++it) {
    const Vector z = aux - (problem.gram() * aux - problem.xty()) / L;
    prev.swap(beta);
    for (Index j = 0; j < p; ++j) beta[j] = soft(z[j], thresh);
    if ((aux - beta).dot(beta - prev) > 0.0) {
      t = 1.0;
      aux = beta;
    } else {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
      aux = beta + ((t - 1.0) / t_next) * (beta - prev);
      t = t_next;
    }
    if (it % 16 == 0) {
      run.residual = optimality_residual(problem, beta);
      if (run.residual < tol) {
        run.reached = true;
        break;
      }
    }
  }
  run.beta = std::move(beta);
  if (!run.reached) run.residual = optimality_residual(problem, run.beta);
  return run;
}

OracleRun cyclic_cd(const LassoProblem& problem, double tol) {
  const Index p = problem.p();
  const Matrix& G = problem.gram();
  Vector beta = Vector::Zero(p);
  Vector g_beta = Vector::Zero(p);  // G * beta, maintained incrementally
  OracleRun run;
  for (long sweep = 0; sweep < kOracleMaxIters / 4; ++sweep) {
    for (Index j = 0; j < p; ++j) {
      const double d = G(j, j);
      if (d <= 0.0) {
        beta[j] = 0.0;
        continue;
      }
      const double r = problem.xty()[j] - (g_beta[j] - d * beta[j]);
      const double updated = soft(r, problem.lambda()) / d;
      const double delta = updated - beta[j];
      if (delta != 0.0) {
        g_beta += delta * G.col(j);
        beta[j] = updated;
      }
    }
    if (sweep % 4 == 0) {
      g_beta.noalias() = G * beta;  // refresh to shed accumulated rounding
      run.residual = optimality_residual(problem, beta);
      if (run.residual < tol) {
        run.reached = true;
        break;
      }
    }
  }
  run.beta = std::move(beta);
  if (!run.reached) run.residual = optimality_residual(problem, run.beta);
  return run;
}

}  // namespace

LassoProblem::LassoProblem(Matrix X, Vector y, double lambda)
    : X_(std::move(X)), y_(std::move(y)), lambda_(lambda) {
  if (X_.rows() < 1 || X_.cols() < 1) throw std::invalid_argument("LassoProblem: empty design");
  if (y_.size() != X_.rows()) throw std::invalid_argument("LassoProblem: y length must equal rows of X");
  if (!(lambda_ >= 0.0) || !std::isfinite(lambda_)) {
    throw std::invalid_argument("LassoProblem: lambda must be finite and non-negative");
  }
  if (!X_.allFinite() || !y_.allFinite()) throw std::invalid_argument("LassoProblem: non-finite data");
  const double inv_n = 1.0 / static_cast<double>(X_.rows());
  gram_.noalias() = X_.transpose() * X_;
  gram_ *= inv_n;
  gram_ = 0.5 * (gram_ + gram_.transpose()).eval();
  xty_.noalias() = X_.transpose() * y_;
  xty_ *= inv_n;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram_, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) throw NumericalFailure("LassoProblem: eigensolver failed");
  eig_min_ = std::max(0.0, eig.eigenvalues().minCoeff());
  eig_max_ = eig.eigenvalues().maxCoeff();
}

LassoProblem LassoProblem::with_lambda(double lambda) const { return LassoProblem(X_, y_, lambda); }

double lasso_objective(const LassoProblem& problem, const Vector& beta) {
  require_length(problem, beta);
  const Vector r = problem.y() - problem.X() * beta;
  return 0.5 * r.squaredNorm() / static_cast<double>(problem.n()) + problem.lambda() * beta.lpNorm<1>();
}

Vector smooth_gradient(const LassoProblem& problem, const Vector& beta) {
  require_length(problem, beta);
  return problem.gram() * beta - problem.xty();
}

Vector min_norm_subgradient(const LassoProblem& problem, const Vector& beta) {
  Vector g = smooth_gradient(problem, beta);
  const double lam = problem.lambda();
  for (Index j = 0; j < g.size(); ++j) {
    if (beta[j] > 0.0) {
      g[j] += lam;
    } else if (beta[j] < 0.0) {
      g[j] -= lam;
    } else {
      g[j] = std::copysign(std::max(std::abs(g[j]) - lam, 0.0), g[j]);
    }
  }
  return g;
}

double optimality_residual(const LassoProblem& problem, const Vector& beta) {
  return min_norm_subgradient(problem, beta).lpNorm<Eigen::Infinity>();
}

bool epsilon_precision(const LassoProblem& problem, const Vector& beta,
                       const ReferenceSolution& ref, double epsilon) {
  return lasso_objective(problem, beta) - ref.f_min <= epsilon;
}

ReferenceSolution reference_minimum(const LassoProblem& problem, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("reference_minimum: tol must be positive");
  const OracleRun fista = restarted_fista(problem, tol);
  const OracleRun cd = cyclic_cd(problem, tol);
  if (!fista.reached && !cd.reached) {
    std::ostringstream msg;
    msg << "reference_minimum: neither solver reached residual " << tol << " (FISTA " << fista.residual
        << ", CD " << cd.residual << ")";
    throw NumericalFailure(msg.str());
  }
  const double f_fista = lasso_objective(problem, fista.beta);
  const double f_cd = lasso_objective(problem, cd.beta);
  if (std::abs(f_fista - f_cd) > 10.0 * tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "reference_minimum: FISTA and CD disagree (" << f_fista << " vs " << f_cd << ")";
    throw NumericalFailure(msg.str());
  }
  ReferenceSolution ref;
  ref.beta_hat = f_fista <= f_cd ? fista.beta : cd.beta;
  ref.f_min = std::min(f_fista, f_cd);
  ref.gap_tolerance = tol;
  return ref;
}

Vector identity_design_solution(const Vector& y, double lambda) {
  const double cut = static_cast<double>(y.size()) * lambda;
  Vector beta(y.size());
  for (Index i = 0; i < y.size(); ++i) beta[i] = soft(y[i], cut);
  return beta;
}

}  // namespace hslasso
