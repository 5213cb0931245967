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

#ifndef HSLASSO_PROBLEM_HPP
#define HSLASSO_PROBLEM_HPP

#include "hslasso/types.hpp"

namespace hslasso {

/// An immutable Lasso instance: minimize (1/2n)||y - X beta||^2 + lambda ||beta||_1.
///
/// X'X/n, X'y/n and the extreme eigenvalues of X'X/n are computed once at
/// construction; every solver reads them from here. Safe to share between
/// concurrent solver runs.
class LassoProblem {
 public:
  /// Throws std::invalid_argument on empty data, mismatched sizes, non-finite
  /// entries or lambda < 0. lambda = 0 is accepted for least-squares probes.
  LassoProblem(Matrix X, Vector y, double lambda);

  Index n() const { return X_.rows(); }
  Index p() const { return X_.cols(); }
  double lambda() const { return lambda_; }
  const Matrix& X() const { return X_; }
  const Vector& y() const { return y_; }
  /// X'X/n, exactly symmetric.
  const Matrix& gram() const { return gram_; }
  /// X'y/n.
  const Vector& xty() const { return xty_; }
  /// Smallest and largest eigenvalue of X'X/n (symmetric eigensolver).
  double gram_eig_min() const { return eig_min_; }
  double gram_eig_max() const { return eig_max_; }

  LassoProblem with_lambda(double lambda) const;

 private:
  Matrix X_;
  Vector y_;
  double lambda_;
  Matrix gram_;
  Vector xty_;
  double eig_min_ = 0.0;
  double eig_max_ = 0.0;
};

/// F(beta) = (1/2n)||y - X beta||^2 + lambda ||beta||_1.
double lasso_objective(const LassoProblem& problem, const Vector& beta);

/// X'X beta / n - X'y / n.
Vector smooth_gradient(const LassoProblem& problem, const Vector& beta);

/// Minimum-norm element of the subdifferential of F at beta. Zero iff beta
/// is a minimizer.
Vector min_norm_subgradient(const LassoProblem& problem, const Vector& beta);

/// Infinity norm of min_norm_subgradient.
double optimality_residual(const LassoProblem& problem, const Vector& beta);

/// A certified minimizer of F.
struct ReferenceSolution {
  Vector beta_hat;
  double f_min = 0.0;
  double gap_tolerance = 0.0;
};

/// True iff F(beta) - ref.f_min <= epsilon.
bool epsilon_precision(const LassoProblem& problem, const Vector& beta,
                       const ReferenceSolution& ref, double epsilon);

/// Default tolerance used when a run needs a reference minimum.
inline constexpr double kReferenceTolerance = 1e-10;

/// Solves the problem twice, with restarted proximal gradient (FISTA) and
/// with cyclic coordinate descent, each to optimality residual below tol,
/// and keeps the lower objective. Throws NumericalFailure if the two
/// objective values differ by more than 10*tol or a solver stalls.
ReferenceSolution reference_minimum(const LassoProblem& problem, double tol = kReferenceTolerance);

/// sign(v_i) * max(|v_i| - n*lambda, 0): the minimizer when X is the n x n identity.
Vector identity_design_solution(const Vector& y, double lambda);

}  // namespace hslasso

#endif  // HSLASSO_PROBLEM_HPP
