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

#ifndef HSLASSO_SURROGATE_HPP
#define HSLASSO_SURROGATE_HPP

#include <utility>

#include "hslasso/problem.hpp"

namespace hslasso {

/// The smoothed absolute value f_t and its cached branch coefficients.
///
///   f_t(x) = c_quad x^2                          for |x| <= t
///          = c_lin |x| + c_inv / |x| + c_const    otherwise
///
/// with l = log(1+t): c_quad = l^2/(3t^3), c_lin = (l/t)^2, c_inv = l^2/3,
/// c_const = -l^2/t. f_t is even, convex, C^1 (in fact C^2), f_t <= |.|, and
/// f_t -> |.| as t -> 0.
struct SurrogateSpec {
  explicit SurrogateSpec(double t);

  double t;
  double log1pt;
  double c_quad;
  double c_lin;
  double c_inv;
  double c_const;
};

double ft_value(const SurrogateSpec& spec, double x);
double ft_grad(const SurrogateSpec& spec, double x);
/// Second derivative: (2/3) log(1+t)^2 max(|x|, t)^-3.
double ft_hess(const SurrogateSpec& spec, double x);
Vector ft_hess_diag(const SurrogateSpec& spec, const Vector& beta);

/// sum_i f_t(beta_i)
double surrogate_penalty(const SurrogateSpec& spec, const Vector& beta);

/// F_t(beta) = (1/2n)||y - X beta||^2 + lambda sum_i f_t(beta_i). Throws
/// std::invalid_argument for t <= 0 or a length mismatch.
double surrogate_objective(const LassoProblem& problem, double t, const Vector& beta);
double surrogate_objective(const LassoProblem& problem, const SurrogateSpec& spec, const Vector& beta);

/// X'X beta/n - X'y/n + lambda f_t'(beta).
Vector surrogate_gradient(const LassoProblem& problem, const SurrogateSpec& spec, const Vector& beta);

/// Gradient Lipschitz constant and strong-convexity modulus of F_t over the
/// box |beta_i| <= B.
struct SmoothnessConstants {
  double L = 0.0;
  double mu = 0.0;
  double kappa = 0.0;  // +inf when mu == 0
  bool bound_below_t = false;  // B < t: outside the regime of the sandwich bound
};

/// L  = eigmax(X'X/n) + lambda (2/3) log(1+t)^2 / t^3
/// mu = eigmin(X'X/n) + lambda (2/3) log(1+t)^2 / B^3
SmoothnessConstants smoothness_constants(const LassoProblem& problem, const SurrogateSpec& spec, double B);

/// Upper bound on kappa valid for every t >= tau while iterates stay in [-B, B]:
/// 3 B^3 eigmax / (2 lambda log(1+tau)^2) + (B/tau)^3.
double condition_number_bound(const LassoProblem& problem, double B, double tau);

/// (f_t(B) - B, 0): for |x| <= B, f_t(x) - |x| lies in this interval.
std::pair<double, double> lemma2_gap_bounds(const SurrogateSpec& spec, double B);

}  // namespace hslasso

#endif  // HSLASSO_SURROGATE_HPP
