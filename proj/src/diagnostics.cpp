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

#include "hslasso/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hslasso/hs_solver.hpp"

namespace hslasso {

namespace {

SVDResult jacobi_tall(const Matrix& A) {
  const Index m = A.rows();
  const Index n = A.cols();
  Matrix U = A;
  Matrix V = Matrix::Identity(n, n);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (Index i = 0; i < n - 1; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        const double a = U.col(i).squaredNorm();
        const double b = U.col(j).squaredNorm();
        const double g = U.col(i).dot(U.col(j));
        if (std::abs(g) <= eps * std::sqrt(a * b) || g == 0.0) continue;
        rotated = true;
        const double zeta = (b - a) / (2.0 * g);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (Index r = 0; r < m; ++r) {
          const double ui = U(r, i);
          const double uj = U(r, j);
          U(r, i) = c * ui - s * uj;
          U(r, j) = s * ui + c * uj;
        }
        for (Index r = 0; r < n; ++r) {
          const double vi = V(r, i);
          const double vj = V(r, j);
          V(r, i) = c * vi - s * vj;
          V(r, j) = s * vi + c * vj;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  Vector norms(n);
  for (Index k = 0; k < n; ++k) norms[k] = U.col(k).norm();
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) { return norms[x] > norms[y]; });

  SVDResult out{Matrix::Zero(m, n), Vector(n), Matrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.sigma[k] = norms[src];
    if (norms[src] > 0.0) out.U.col(k) = U.col(src) / norms[src];
    out.V.col(k) = V.col(src);
  }
  return out;
}

Matrix columns(const Matrix& X, const std::vector<Index>& idx) {
  Matrix out(X.rows(), static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) out.col(static_cast<Index>(k)) = X.col(idx[k]);
  return out;
}

}  // namespace

SVDResult jacobi_svd(const Matrix& A) {
  if (A.size() == 0) throw std::invalid_argument("jacobi_svd: empty matrix");
  if (A.rows() >= A.cols()) return jacobi_tall(A);
  SVDResult t = jacobi_tall(A.transpose());
  return SVDResult{std::move(t.V), std::move(t.sigma), std::move(t.U)};
}

Matrix pseudo_inverse(const Matrix& A, double rel_cutoff) {
  const SVDResult svd = jacobi_svd(A);
  const double cutoff = rel_cutoff * (svd.sigma.size() ? svd.sigma[0] : 0.0);
  Vector inv = Vector::Zero(svd.sigma.size());
  for (Index k = 0; k < svd.sigma.size(); ++k) {
    if (svd.sigma[k] > cutoff) inv[k] = 1.0 / svd.sigma[k];
  }
  return svd.V * inv.asDiagonal() * svd.U.transpose();
}

std::vector<Index> support_set(const Vector& beta, double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("support_set: tol must be nonnegative");
  std::vector<Index> out;
  for (Index i = 0; i < beta.size(); ++i) {
    if (std::abs(beta[i]) > tol) out.push_back(i);
  }
  return out;
}

double default_support_tolerance(const Vector& beta_hat) {
  return 1e-8 * (beta_hat.size() ? beta_hat.lpNorm<Eigen::Infinity>() : 0.0);
}

double prediction_error(const LassoProblem& problem, const Vector& beta_tilde, const Vector& beta_hat) {
  if (beta_tilde.size() != problem.p() || beta_hat.size() != problem.p()) {
    throw std::invalid_argument("prediction_error: length mismatch");
  }
  return (problem.X() * (beta_tilde - beta_hat)).squaredNorm() / static_cast<double>(problem.n());
}

double estimation_error(const Vector& beta_tilde, const Vector& beta_hat) {
  if (beta_tilde.size() != beta_hat.size()) throw std::invalid_argument("estimation_error: length mismatch");
  return (beta_tilde - beta_hat).squaredNorm();
}

Prop2Report prop2_condition_check(const Matrix& X, const std::vector<Index>& s_set) {
  const Index p = X.cols();
  std::vector<bool> in_s(static_cast<std::size_t>(p), false);
  for (Index i : s_set) {
    if (i < 0 || i >= p || in_s[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("prop2_condition_check: invalid or repeated index");
    }
    in_s[static_cast<std::size_t>(i)] = true;
  }
  if (s_set.empty() || static_cast<Index>(s_set.size()) >= p) {
    throw std::invalid_argument("prop2_condition_check: S must be a nonempty proper subset");
  }
  std::vector<Index> sc;
  for (Index i = 0; i < p; ++i) {
    if (!in_s[static_cast<std::size_t>(i)]) sc.push_back(i);
  }

  const Matrix XS = columns(X, s_set);
  const Matrix XSc = columns(X, sc);
  const SVDResult svd_s = jacobi_svd(XS);
  const double smax = svd_s.sigma[0];
  if (static_cast<Index>(s_set.size()) > X.rows() || !(svd_s.sigma.tail(1)[0] > 1e-12 * smax)) {
    throw std::invalid_argument("prop2_condition_check: X_S is rank deficient");
  }
  // (X_S'X_S)^{-1} X_S' equals the pseudo-inverse for full column rank.
  const Matrix pinv_s = pseudo_inverse(XS);
  const Matrix pinv_sc = pseudo_inverse(XSc);

  Prop2Report r;
  r.s_set = s_set;
  r.frob_pinv_s = pinv_s.norm();
  r.frob_pinv_sc = pinv_sc.norm();
  const Matrix s1 = pinv_s * XSc + (pinv_sc * XS).transpose();
  const Matrix proj = pinv_sc * XSc;
  const Matrix s2 = 0.5 * (proj + proj.transpose());
  r.sigma_max_S1 = jacobi_svd(s1).sigma[0];
  r.sigma_min_S2 = jacobi_svd(s2).sigma.tail(1)[0];
  r.condition3_holds = r.sigma_max_S1 < std::min(2.0, 2.0 * r.sigma_min_S2);
  return r;
}

std::vector<SweepRow> surrogate_sweep(const LassoProblem& problem, const Vector& beta_hat,
                                      const std::vector<double>& ts) {
  std::vector<SweepRow> rows;
  Vector start = beta_hat;
  for (double t : ts) {
    const SurrogateMinimum m = minimize_surrogate(problem, t, start, 1e-13, 1000);
    rows.push_back({t, prediction_error(problem, m.beta, beta_hat), estimation_error(m.beta, beta_hat), m.grad_norm});
    start = m.beta;
  }
  return rows;
}

nlohmann::json to_json(const Prop2Report& r) {
  return {{"s_set", r.s_set},
          {"frob_pinv_s", r.frob_pinv_s},
          {"frob_pinv_sc", r.frob_pinv_sc},
          {"sigma_max_S1", r.sigma_max_S1},
          {"sigma_min_S2", r.sigma_min_S2},
          {"condition3_holds", r.condition3_holds},
          {"svd", kSvdIdentifier}};
}

nlohmann::json to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"t", r.t},
                   {"prediction_error", r.prediction_error},
                   {"estimation_error", r.estimation_error},
                   {"grad_norm", r.grad_norm}});
  }
  return out;
}

}  // namespace hslasso
