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

#include "hslasso/opcount.hpp"

#include <stdexcept>

namespace hslasso {

OpSnapshot OpSnapshot::operator-(const OpSnapshot& earlier) const {
  if (mults < earlier.mults || adds < earlier.adds ||
      transcendentals < earlier.transcendentals || comparisons < earlier.comparisons ||
      setup_ops < earlier.setup_ops) {
    throw std::logic_error("OpSnapshot: subtracting a later snapshot");
  }
  return {mults - earlier.mults, adds - earlier.adds, transcendentals - earlier.transcendentals,
          comparisons - earlier.comparisons, setup_ops - earlier.setup_ops};
}

void OpCounter::charge_matvec(std::uint64_t rows, std::uint64_t cols) {
  if (rows == 0 || cols == 0) return;
  s_.mults += rows * cols;
  s_.adds += rows * (cols - 1);
}

void OpCounter::charge_axpy(std::uint64_t length) {
  s_.mults += length;
  s_.adds += length;
}

void OpCounter::charge_scalar(ScalarOp kind, std::uint64_t count) {
  switch (kind) {
    case ScalarOp::mult: s_.mults += count; break;
    case ScalarOp::add: s_.adds += count; break;
    case ScalarOp::transcendental: s_.transcendentals += count; break;
    case ScalarOp::comparison: s_.comparisons += count; break;
  }
}

void OpCounter::charge_soft_threshold(std::uint64_t count) {
  s_.comparisons += 2 * count;
  s_.adds += count;
}

void OpCounter::charge_cholesky_solve(std::uint64_t p) {
  // Column j: j mult/add pairs and a sqrt for the pivot, then for each of the
  // p-1-j entries below it, j mult/add pairs and one division.
  for (std::uint64_t j = 0; j < p; ++j) {
    s_.mults += j;
    s_.adds += j;
    s_.transcendentals += 1;
    const std::uint64_t below = p - 1 - j;
    s_.mults += below * (j + 1);
    s_.adds += below * j;
  }
  // Forward and backward substitution: row i costs i mult/add pairs and a division.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::uint64_t i = 0; i < p; ++i) {
      s_.mults += i + 1;
      s_.adds += i;
    }
  }
}

void OpCounter::charge_setup(std::uint64_t ops) { s_.setup_ops += ops; }

std::uint64_t gram_setup_cost(std::uint64_t n, std::uint64_t p) {
  // Upper triangle of X'X (p(p+1)/2 dot products of length n), X'y (p dot
  // products), and the 1/n scaling of both.
  const std::uint64_t dot = 2 * n - 1;
  const std::uint64_t entries = p * (p + 1) / 2 + p;
  return entries * dot + entries;
}

}  // namespace hslasso
