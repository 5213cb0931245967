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

#ifndef HSLASSO_DIAGNOSTICS_HPP
#define HSLASSO_DIAGNOSTICS_HPP

#include <vector>

#include "json.hpp"

#include "hslasso/problem.hpp"

namespace hslasso {

inline constexpr const char* kSvdIdentifier = "one-sided-jacobi";

/// Thin SVD, A = U diag(sigma) V', sigma sorted descending. Columns of U that
/// belong to zero singular values are zero.
struct SVDResult {
  Matrix U;
  Vector sigma;
  Matrix V;
};
SVDResult jacobi_svd(const Matrix& A);

/// Singular values below rel_cutoff * sigma_max are treated as zero.
Matrix pseudo_inverse(const Matrix& A, double rel_cutoff = 1e-12);

std::vector<Index> support_set(const Vector& beta, double tol);
/// 1e-8 * ||beta_hat||_inf.
double default_support_tolerance(const Vector& beta_hat);

/// (1/n) ||X (beta_tilde - beta_hat)||^2.
double prediction_error(const LassoProblem& problem, const Vector& beta_tilde, const Vector& beta_hat);
/// ||beta_tilde - beta_hat||^2.
double estimation_error(const Vector& beta_tilde, const Vector& beta_hat);

struct Prop2Report {
  std::vector<Index> s_set;
  double frob_pinv_s = 0.0;
  double frob_pinv_sc = 0.0;
  double sigma_max_S1 = 0.0;
  double sigma_min_S2 = 0.0;
  bool condition3_holds = false;
};

/// s_set must be a nonempty proper subset of the columns with X_S of full
/// column rank; otherwise std::invalid_argument.
Prop2Report prop2_condition_check(const Matrix& X, const std::vector<Index>& s_set);

struct SweepRow {
  double t = 0.0;
  double prediction_error = 0.0;
  double estimation_error = 0.0;
  double grad_norm = 0.0;  // residual of the surrogate minimizer
};

/// beta_tilde(t) minimizes F_t; one row per t, compared against beta_hat.
std::vector<SweepRow> surrogate_sweep(const LassoProblem& problem, const Vector& beta_hat,
                                      const std::vector<double>& ts);

nlohmann::json to_json(const Prop2Report& report);
nlohmann::json to_json(const std::vector<SweepRow>& rows);

}  // namespace hslasso

#endif  // HSLASSO_DIAGNOSTICS_HPP
