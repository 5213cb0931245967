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

#include "hslasso/surrogate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hslasso {

SurrogateSpec::SurrogateSpec(double t_) : t(t_) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("SurrogateSpec: t must be positive and finite");
  log1pt = std::log1p(t);
  const double l2 = log1pt * log1pt;
  c_quad = l2 / (3.0 * t * t * t);
  c_lin = (log1pt / t) * (log1pt / t);
  c_inv = l2 / 3.0;
  c_const = -l2 / t;
}

double ft_value(const SurrogateSpec& s, double x) {
  const double a = std::abs(x);
  if (a <= s.t) return s.c_quad * a * a;
  return s.c_lin * a + s.c_inv / a + s.c_const;
}

double ft_grad(const SurrogateSpec& s, double x) {
  const double a = std::abs(x);
  if (a <= s.t) return 2.0 * s.c_quad * x;
  const double mag = s.c_lin - s.c_inv / (a * a);
  return x > 0.0 ? mag : -mag;
}

double ft_hess(const SurrogateSpec& s, double x) {
  const double m = std::max(std::abs(x), s.t);
  return 2.0 * s.c_inv / (m * m * m);
}

Vector ft_hess_diag(const SurrogateSpec& spec, const Vector& beta) {
  Vector h(beta.size());
  for (Index i = 0; i < beta.size(); ++i) h[i] = ft_hess(spec, beta[i]);
  return h;
}

double surrogate_penalty(const SurrogateSpec& spec, const Vector& beta) {
  double sum = 0.0;
  for (Index i = 0; i < beta.size(); ++i) sum += ft_value(spec, beta[i]);
  return sum;
}

double surrogate_objective(const LassoProblem& problem, const SurrogateSpec& spec, const Vector& beta) {
  if (beta.size() != problem.p()) throw std::invalid_argument("surrogate_objective: beta length must equal p");
  const Vector r = problem.y() - problem.X() * beta;
  return 0.5 * r.squaredNorm() / static_cast<double>(problem.n()) +
         problem.lambda() * surrogate_penalty(spec, beta);
}

double surrogate_objective(const LassoProblem& problem, double t, const Vector& beta) {
  return surrogate_objective(problem, SurrogateSpec(t), beta);
}

Vector surrogate_gradient(const LassoProblem& problem, const SurrogateSpec& spec, const Vector& beta) {
  Vector g = problem.gram() * beta - problem.xty();
  for (Index i = 0; i < beta.size(); ++i) g[i] += problem.lambda() * ft_grad(spec, beta[i]);
  return g;
}

SmoothnessConstants smoothness_constants(const LassoProblem& problem, const SurrogateSpec& spec, double B) {
  if (!(B > 0.0)) throw std::invalid_argument("smoothness_constants: B must be positive");
  SmoothnessConstants c;
  c.L = problem.gram_eig_max() + problem.lambda() * ft_hess(spec, 0.0);
  c.mu = problem.gram_eig_min() + problem.lambda() * ft_hess(spec, B);
  c.kappa = c.mu > 0.0 ? c.L / c.mu : std::numeric_limits<double>::infinity();
  c.bound_below_t = B < spec.t;
  return c;
}

double condition_number_bound(const LassoProblem& problem, double B, double tau) {
  if (!(B > 0.0) || !(tau > 0.0)) throw std::invalid_argument("condition_number_bound: B and tau must be positive");
  const double l = std::log1p(tau);
  const double ratio = B / tau;
  return 3.0 * B * B * B * problem.gram_eig_max() / (2.0 * problem.lambda() * l * l) + ratio * ratio * ratio;
}

std::pair<double, double> lemma2_gap_bounds(const SurrogateSpec& spec, double B) {
  return {ft_value(spec, B) - B, 0.0};
}

}  // namespace hslasso
