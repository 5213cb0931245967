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

#ifndef HSLASSO_OPCOUNT_HPP
#define HSLASSO_OPCOUNT_HPP

#include <cstdint>

namespace hslasso {

/// Immutable copy of all counter buckets at one instant.
struct OpSnapshot {
  std::uint64_t mults = 0;
  std::uint64_t adds = 0;
  std::uint64_t transcendentals = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t setup_ops = 0;

  /// Per-run work, setup excluded.
  std::uint64_t total() const { return mults + adds + transcendentals + comparisons; }
  std::uint64_t total_with_setup() const { return total() + setup_ops; }

  /// Bucket-wise difference; callers pass an earlier snapshot of the same counter.
  OpSnapshot operator-(const OpSnapshot& earlier) const;
  bool operator==(const OpSnapshot&) const = default;
};

enum class ScalarOp { mult, add, transcendental, comparison };

/// Arithmetic tally. Solvers charge every algebraic step explicitly, so the
/// counts are exact integers that do not depend on how the compiler
/// schedules the floating point work. Divisions are charged as mults.
class OpCounter {
 public:
  /// rows*cols mults and rows*(cols-1) adds; p(2p-1) for a square p x p product.
  void charge_matvec(std::uint64_t rows, std::uint64_t cols);
  /// length mults + length adds (y += a*x).
  void charge_axpy(std::uint64_t length);
  void charge_scalar(ScalarOp kind, std::uint64_t count = 1);
  /// Two comparisons and one add: the fixed cost of one soft-threshold call.
  void charge_soft_threshold(std::uint64_t count = 1);
  /// Cholesky factorization of a p x p SPD matrix plus one forward and one
  /// backward triangular solve.
  void charge_cholesky_solve(std::uint64_t p);
  /// One-time precomputation (gram, eigenvalues, t0 search).
  void charge_setup(std::uint64_t ops);

  OpSnapshot snapshot() const { return s_; }
  std::uint64_t total() const { return s_.total(); }

 private:
  OpSnapshot s_;
};

/// Flop cost of forming X'X/n and X'y/n for an n x p design.
std::uint64_t gram_setup_cost(std::uint64_t n, std::uint64_t p);

}  // namespace hslasso

#endif  // HSLASSO_OPCOUNT_HPP
