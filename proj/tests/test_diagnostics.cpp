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
#include <random>

#include "doctest.h"

#include "hslasso/datagen.hpp"
#include "hslasso/diagnostics.hpp"
#include "support.hpp"

using namespace hslasso;

TEST_CASE("Jacobi SVD reconstructs and matches a library SVD") {
  std::mt19937_64 rng(1);
  for (auto [r, c] : {std::pair{6L, 3L}, std::pair{3L, 6L}, std::pair{10L, 10L}, std::pair{1L, 4L}}) {
    const Matrix A = testing::gaussian_matrix(rng, r, c);
    const SVDResult s = jacobi_svd(A);
    CHECK((s.U * s.sigma.asDiagonal() * s.V.transpose() - A).norm() < 1e-10);
    const Eigen::JacobiSVD<Matrix> ref(A);
    CHECK((s.sigma.head(ref.singularValues().size()) - ref.singularValues()).norm() < 1e-10);
    for (Index k = 1; k < s.sigma.size(); ++k) CHECK(s.sigma[k] <= s.sigma[k - 1]);
    CHECK((s.V.transpose() * s.V - Matrix::Identity(s.V.cols(), s.V.cols())).norm() < 1e-10);
  }
  CHECK_THROWS_AS(jacobi_svd(Matrix(0, 0)), std::invalid_argument);
}

TEST_CASE("pseudo-inverse satisfies the Moore-Penrose identities") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix A = testing::gaussian_matrix(rng, 5, 4);
    if (trial % 2 == 0) A.col(3) = A.col(0) - A.col(1);  // rank deficient
    const Matrix P = pseudo_inverse(A);
    CHECK((A * P * A - A).norm() < 1e-10);
    CHECK((P * A * P - P).norm() < 1e-10);
    CHECK((A * P - (A * P).transpose()).norm() < 1e-10);
    CHECK((P * A - (P * A).transpose()).norm() < 1e-10);
  }
}

TEST_CASE("support set") {
  CHECK(support_set(Vector::Zero(4), 0.0).empty());
  const Vector b = (Vector(3) << 1.0, 1e-12, -2.0).finished();
  CHECK(support_set(b, 1e-8) == std::vector<Index>{0, 2});
  CHECK_THROWS_AS(support_set(b, -1.0), std::invalid_argument);
  CHECK(default_support_tolerance(b) == doctest::Approx(2e-8));

  const long n = 8;
  const Vector y = (Vector(n) << 1.0, -0.05, 0.3, 0.0, -2.0, 0.07, 0.79, -0.81).finished();
  const double lambda = 0.1;
  const LassoProblem pr(Matrix::Identity(n, n), y, lambda);
  const auto ref = reference_minimum(pr);
  std::vector<Index> expect;
  for (long i = 0; i < n; ++i)
    if (std::abs(y[i]) > n * lambda) expect.push_back(i);
  CHECK(support_set(ref.beta_hat, default_support_tolerance(ref.beta_hat)) == expect);
}

TEST_CASE("prediction and estimation errors") {
  const auto pr = testing::random_problem(3, 4, 6, 0.1);
  const Vector a = Vector::LinSpaced(6, -1.0, 1.0);
  CHECK(prediction_error(pr, a, a) == 0.0);
  CHECK(estimation_error(a, a) == 0.0);
  Vector e = a;
  e[2] += 1.0;
  CHECK(estimation_error(e, a) == doctest::Approx(1.0));
  // p > n, so X has a null space.
  const Eigen::FullPivLU<Matrix> lu(pr.X());
  const Vector null = lu.kernel().col(0);
  CHECK(prediction_error(pr, a + null, a) < 1e-24);
  CHECK(estimation_error(a + null, a) > 0.0);
  CHECK(prediction_error(pr, e, a) == doctest::Approx(pr.X().col(2).squaredNorm() / 4.0));
  CHECK_THROWS_AS(prediction_error(pr, Vector::Zero(2), a), std::invalid_argument);
  CHECK_THROWS_AS(estimation_error(Vector::Zero(2), a), std::invalid_argument);
}

TEST_CASE("condition check on an orthonormal design") {
  std::mt19937_64 rng(4);
  const Eigen::HouseholderQR<Matrix> qr(testing::gaussian_matrix(rng, 10, 10));
  const Matrix Q = Matrix(qr.householderQ()).leftCols(6);
  const auto r = prop2_condition_check(Q, {0, 2, 5});
  CHECK(r.sigma_max_S1 < 1e-12);
  CHECK(r.sigma_min_S2 == doctest::Approx(1.0));
  CHECK(r.condition3_holds);
  CHECK(r.frob_pinv_s == doctest::Approx(std::sqrt(3.0)));
  CHECK(r.frob_pinv_sc == doctest::Approx(std::sqrt(3.0)));
  CHECK(r.condition3_holds == (r.sigma_max_S1 < std::min(2.0, 2.0 * r.sigma_min_S2)));
}

TEST_CASE("condition check fails with a column duplicated across S and its complement") {
  std::mt19937_64 rng(5);
  for (double scale : {1.0, 0.5, 3.0}) {
    Matrix X = testing::gaussian_matrix(rng, 12, 5);
    X.col(4) = scale * X.col(0);
    const auto r = prop2_condition_check(X, {0, 1});
    CHECK(r.sigma_max_S1 >= 2.0 - 1e-9);
    CHECK_FALSE(r.condition3_holds);
    CHECK(r.condition3_holds == (r.sigma_max_S1 < std::min(2.0, 2.0 * r.sigma_min_S2)));
  }
}

TEST_CASE("condition check argument errors") {
  std::mt19937_64 rng(6);
  Matrix X = testing::gaussian_matrix(rng, 8, 4);
  CHECK_THROWS_AS(prop2_condition_check(X, {}), std::invalid_argument);
  CHECK_THROWS_AS(prop2_condition_check(X, {0, 1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(prop2_condition_check(X, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(prop2_condition_check(X, {7}), std::invalid_argument);
  X.col(1) = 2.0 * X.col(0);
  CHECK_THROWS_AS(prop2_condition_check(X, {0, 1}), std::invalid_argument);
}

TEST_CASE("surrogate minimizers approach the lasso fit as t shrinks") {
  const auto inst = generate(scenario("sim1", 50, 20, 8));
  const auto ref = reference_minimum(inst.problem);
  const auto rows = surrogate_sweep(inst.problem, ref.beta_hat, {1.0, 0.1, 0.01, 1e-3, 1e-4});
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].prediction_error <= rows[i - 1].prediction_error + 1e-12);
  }
  CHECK(rows.back().prediction_error < 1e-6);
  for (const auto& r : rows) CHECK(r.grad_norm < 1e-10);
  CHECK(to_json(rows).size() == 5);
}

TEST_CASE("estimation error is small on a well-conditioned design") {
  // Orthogonal-ish design with n >> p and a sparse truth.
  auto spec = scenario("sim2", 400, 10, 2);
  spec.rho = 0.0;
  const auto inst = generate(spec);
  const auto ref = reference_minimum(inst.problem);
  const auto rows = surrogate_sweep(inst.problem, ref.beta_hat, {1e-4});
  CHECK(rows[0].estimation_error < 1e-4);
}
