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

#include <cmath>
#include <limits>

#include "doctest.h"

#include "hslasso/surrogate.hpp"
#include "support.hpp"

using namespace hslasso;

namespace {

const double kTs[] = {10.0, 1.0, 0.1, 0.01, 0.001};

double central_diff(const auto& f, double x, double h) { return (f(x + h) - f(x - h)) / (2.0 * h); }

}  // namespace

TEST_CASE("surrogate spec rejects nonpositive or non-finite t") {
  CHECK_THROWS_AS(SurrogateSpec(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SurrogateSpec(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(SurrogateSpec(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
  CHECK_THROWS_AS(SurrogateSpec(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("f_t matches the piecewise definition") {
  for (double t : kTs) {
    const SurrogateSpec s(t);
    for (double x : {-20.0, -3.0, -t, -0.5 * t, 0.0, 0.3 * t, t, 1.5 * t, 7.0}) {
      CHECK(ft_value(s, x) == doctest::Approx(testing::ft_oracle(t, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("f_t known values") {
  const SurrogateSpec s(1.0);
  const double l = std::log(2.0);
  CHECK(ft_value(s, 0.0) == 0.0);
  CHECK(ft_value(s, 1.0) == doctest::Approx(l * l / 3.0).epsilon(1e-15));
  CHECK(ft_value(s, 2.0) == doctest::Approx(l * l * (2.0 + 1.0 / 6.0 - 1.0)).epsilon(1e-15));
}

TEST_CASE("value and slope are continuous at the branch points") {
  for (double t : kTs) {
    const SurrogateSpec s(t);
    for (double sign : {-1.0, 1.0}) {
      const double in = sign * t;
      const double out = sign * std::nextafter(t, 2.0 * t);
      CHECK(std::abs(ft_value(s, in) - ft_value(s, out)) < 1e-12);
      CHECK(std::abs(ft_grad(s, in) - ft_grad(s, out)) < 1e-12);
    }
  }
}

TEST_CASE("derivative agrees with central differences") {
  for (double t : kTs) {
    const SurrogateSpec s(t);
    auto f = [&](double x) { return ft_value(s, x); };
    for (double r : {-4.0, -1.7, -0.6, -0.2, 0.35, 0.8, 1.3, 2.5, 9.0}) {
      const double x = r * t;
      const double h = 1e-5 * std::max(t, std::abs(x));
      const double fd = central_diff(f, x, h);
      const double g = ft_grad(s, x);
      CHECK(std::abs(fd - g) <= 1e-6 * std::max(1.0, std::abs(g)));
    }
  }
}

TEST_CASE("second derivative agrees with differences of the first") {
  for (double t : {1.0, 0.1, 0.01}) {
    const SurrogateSpec s(t);
    auto g = [&](double x) { return ft_grad(s, x); };
    for (double r : {-3.0, -0.5, 0.25, 0.9, 1.1, 4.0}) {
      const double x = r * t;
      const double h = 1e-6 * t;
      const double H = ft_hess(s, x);
      CHECK(std::abs(central_diff(g, x, h) - H) <= 1e-5 * std::max(1.0, H));
    }
  }
}

TEST_CASE("second derivative is continuous across |x| = t") {
  for (double t : {10.0, 1.0, 0.1, 0.001}) {
    const SurrogateSpec s(t);
    const double out = std::nextafter(t, 2 * t);
    CHECK(ft_hess(s, t) == doctest::Approx(ft_hess(s, out)).epsilon(1e-12));
    CHECK(ft_hess(s, -t) == doctest::Approx(ft_hess(s, -out)).epsilon(1e-12));
  }
}

TEST_CASE("f_t is even, nonnegative, convex, and below |x|") {
  for (double t : kTs) {
    const SurrogateSpec s(t);
    for (int i = -200; i <= 200; ++i) {
      const double x = 0.05 * i;
      CHECK(ft_value(s, x) == ft_value(s, -x));
      CHECK(ft_value(s, x) >= 0.0);
      CHECK(ft_value(s, x) <= std::abs(x) + 1e-15);
      CHECK(ft_hess(s, x) > 0.0);
    }
  }
}

TEST_CASE("f_t approaches |x| as t shrinks") {
  for (double x : {-2.0, -0.3, 0.01, 1.0, 5.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1.0, 0.1, 0.01, 1e-3, 1e-4, 1e-5}) {
      const double gap = std::abs(x) - ft_value(SurrogateSpec(t), x);
      CHECK(gap <= prev);
      prev = gap;
    }
    CHECK(prev < 1e-4);
  }
}

TEST_CASE("sandwich bound on bounded grids") {
  for (double t : kTs) {
    const SurrogateSpec s(t);
    for (double B : {1.0, 2.0, 10.0}) {
      const auto [lo, hi] = lemma2_gap_bounds(s, B);
      CHECK(hi == 0.0);
      CHECK(lo == doctest::Approx(testing::ft_oracle(t, B) - B));
      for (int i = 0; i <= 10000; ++i) {
        const double x = -B + 2.0 * B * i / 10000.0;
        const double d = ft_value(s, x) - std::abs(x);
        REQUIRE(d >= lo - 1e-12);
        REQUIRE(d <= hi + 1e-12);
      }
    }
  }
}

TEST_CASE("surrogate objective and gradient") {
  const auto pr = testing::random_problem(11, 12, 4, 0.3);
  const Vector b = (Vector(4) << 0.7, -0.02, 0.0, -1.4).finished();
  const double t = 0.1;
  const SurrogateSpec s(t);

  double penalty = 0.0;
  for (int i = 0; i < 4; ++i) penalty += testing::ft_oracle(t, b[i]);
  const double rss = (pr.y() - pr.X() * b).squaredNorm() / (2.0 * 12.0);
  CHECK(surrogate_objective(pr, t, b) == doctest::Approx(rss + 0.3 * penalty).epsilon(1e-13));
  CHECK(surrogate_penalty(s, b) == doctest::Approx(penalty).epsilon(1e-13));
  CHECK_THROWS_AS(surrogate_objective(pr, 0.0, b), std::invalid_argument);
  CHECK_THROWS_AS(surrogate_objective(pr, t, Vector::Zero(3)), std::invalid_argument);

  const Vector g = surrogate_gradient(pr, s, b);
  for (int i = 0; i < 4; ++i) {
    Vector bp = b, bm = b;
    const double h = 1e-6;
    bp[i] += h;
    bm[i] -= h;
    const double fd = (surrogate_objective(pr, s, bp) - surrogate_objective(pr, s, bm)) / (2.0 * h);
    CHECK(std::abs(fd - g[i]) < 1e-6 * std::max(1.0, std::abs(g[i])));
  }
}

TEST_CASE("smoothness constants bound the Hessian over the box") {
  const auto pr = testing::random_problem(5, 30, 6, 0.05);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double t : {1.0, 0.1, 0.01}) {
    const SurrogateSpec s(t);
    const double B = 3.0;
    const auto c = smoothness_constants(pr, s, B);
    CHECK(c.kappa == doctest::Approx(c.L / c.mu));
    for (int trial = 0; trial < 50; ++trial) {
      Vector b(6);
      for (int i = 0; i < 6; ++i) b[i] = B * u(rng);
      Matrix H = pr.gram();
      for (int i = 0; i < 6; ++i) H(i, i) += pr.lambda() * ft_hess(s, b[i]);
      const Eigen::SelfAdjointEigenSolver<Matrix> es(H);
      CHECK(es.eigenvalues().maxCoeff() <= c.L * (1 + 1e-12));
      CHECK(es.eigenvalues().minCoeff() >= c.mu * (1 - 1e-12));
    }
  }
  CHECK_THROWS_AS(smoothness_constants(pr, SurrogateSpec(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("condition number bound dominates kappa for t >= tau") {
  const auto pr = testing::random_problem(6, 40, 5, 1e-3);
  const double B = 4.0, tau = 1e-3;
  const double bound = condition_number_bound(pr, B, tau);
  for (double t : {3.0, 1.0, 0.3, 0.05, 0.01, 2e-3, 1e-3}) {
    CHECK(smoothness_constants(pr, SurrogateSpec(t), B).kappa <= bound);
  }
}

TEST_CASE("zero modulus gives infinite kappa") {
  // A zero column makes the gram singular exactly; lambda = 0 removes the penalty curvature.
  Matrix X(3, 2);
  X << 1, 0, 2, 0, 3, 0;
  const LassoProblem pr(X, Vector::Ones(3), 0.0);
  const auto c = smoothness_constants(pr, SurrogateSpec(1.0), 1.0);
  CHECK(std::isinf(c.kappa));
}
