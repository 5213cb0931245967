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

#ifndef HSLASSO_TESTS_SUPPORT_HPP
#define HSLASSO_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "hslasso/problem.hpp"

namespace testing {

using hslasso::LassoProblem;
using hslasso::Matrix;
using hslasso::Vector;

inline Matrix gaussian_matrix(std::mt19937_64& rng, long rows, long cols) {
  std::normal_distribution<double> nd;
  Matrix m(rows, cols);
  for (long j = 0; j < cols; ++j)
    for (long i = 0; i < rows; ++i) m(i, j) = nd(rng);
  return m;
}

inline Vector gaussian_vector(std::mt19937_64& rng, long n) {
  std::normal_distribution<double> nd;
  Vector v(n);
  for (long i = 0; i < n; ++i) v[i] = nd(rng);
  return v;
}

inline LassoProblem random_problem(std::uint64_t seed, long n, long p, double lambda) {
  std::mt19937_64 rng(seed);
  Matrix X = gaussian_matrix(rng, n, p);
  Vector y = gaussian_vector(rng, n);
  return LassoProblem(std::move(X), std::move(y), lambda);
}

// Direct transcription of the lasso objective with explicit loops.
inline double loop_objective(const LassoProblem& pr, const Vector& b) {
  double rss = 0.0;
  for (long i = 0; i < pr.n(); ++i) {
    double r = pr.y()[i];
    for (long j = 0; j < pr.p(); ++j) r -= pr.X()(i, j) * b[j];
    rss += r * r;
  }
  double l1 = 0.0;
  for (long j = 0; j < pr.p(); ++j) l1 += std::abs(b[j]);
  return rss / (2.0 * static_cast<double>(pr.n())) + pr.lambda() * l1;
}

// Surrogate value written from the piecewise definition, independent of the
// library's cached coefficients.
inline double ft_oracle(double t, double x) {
  const double l = std::log(1.0 + t);
  const double a = std::abs(x);
  if (a <= t) return l * l * x * x / (3.0 * t * t * t);
  return l * l * a / (t * t) + l * l / (3.0 * a) - l * l / t;
}

// Brute-force minimum over a box: a full grid at `step`, then repeated
// 10x refinements on a +-2 cell window around the incumbent down to `fine`.
// The objective is expanded as y'y/2n - b'X'y/n + b'Gb/2 + lambda|b|_1.
inline double grid_minimum(const LassoProblem& pr, double lo, double hi, double step, double fine) {
  const long p = pr.p();
  const Matrix G = pr.X().transpose() * pr.X() / static_cast<double>(pr.n());
  const Vector c = pr.X().transpose() * pr.y() / static_cast<double>(pr.n());
  const double yy = pr.y().squaredNorm() / (2.0 * static_cast<double>(pr.n()));
  auto eval = [&](const Vector& b) {
    return yy - b.dot(c) + 0.5 * b.dot(G * b) + pr.lambda() * b.lpNorm<1>();
  };
  Vector center = Vector::Constant(p, 0.5 * (lo + hi));
  double half = 0.5 * (hi - lo);
  double best = std::numeric_limits<double>::infinity();
  Vector arg = center;
  while (true) {
    const long cells = static_cast<long>(std::llround(2.0 * half / step));
    std::vector<long> idx(static_cast<std::size_t>(p), 0);
    Vector b(p);
    for (bool more = true; more;) {
      for (long j = 0; j < p; ++j) b[j] = center[j] - half + step * static_cast<double>(idx[static_cast<std::size_t>(j)]);
      const double f = eval(b);
      if (f < best) {
        best = f;
        arg = b;
      }
      more = false;
      for (long j = 0; j < p; ++j) {
        if (++idx[static_cast<std::size_t>(j)] <= cells) {
          more = true;
          break;
        }
        idx[static_cast<std::size_t>(j)] = 0;
      }
    }
    if (step <= fine * (1 + 1e-9)) break;
    center = arg;
    half = 2.0 * step;
    step /= 10.0;
  }
  return best;
}

}  // namespace testing

#endif
