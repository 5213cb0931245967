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

#include "hslasso/datagen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hslasso {

std::string pattern_name(BetaPattern pattern) {
  return pattern == BetaPattern::dense_exp ? "dense-exp" : "sparse-exp";
}

BetaPattern parse_pattern(const std::string& name) {
  if (name == "dense-exp") return BetaPattern::dense_exp;
  if (name == "sparse-exp") return BetaPattern::sparse_exp;
  throw std::invalid_argument("unknown beta pattern: " + name);
}

void SyntheticSpec::validate() const {
  if (n < 1 || p < 1) throw std::invalid_argument("SyntheticSpec: n and p must be >= 1");
  if (!(rho >= 0.0 && rho < 1.0)) throw std::invalid_argument("SyntheticSpec: rho must lie in [0, 1)");
  if (!(snr > 0.0)) throw std::invalid_argument("SyntheticSpec: snr must be positive");
  if (pattern == BetaPattern::sparse_exp && (s < 1 || s > p)) {
    throw std::invalid_argument("SyntheticSpec: sparse pattern needs 1 <= s <= p");
  }
}

SyntheticSpec scenario(const std::string& name, long n, long p, std::uint64_t seed) {
  SyntheticSpec spec;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  if (name == "sim1") {
    spec.pattern = BetaPattern::dense_exp;
  } else if (name == "sim2") {
    spec.pattern = BetaPattern::sparse_exp;
    spec.s = std::min(10L, p);
  } else {
    throw std::invalid_argument("unknown scenario: " + name);
  }
  return spec;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

double NormalStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * scale;  // (0, 1]
  const double u2 = static_cast<double>(engine_() >> 11) * scale;        // [0, 1)
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Vector NormalStream::draw(long count) {
  Vector out(count);
  for (long i = 0; i < count; ++i) out[i] = next();
  return out;
}

Matrix equicorrelated_design(const SyntheticSpec& spec) {
  spec.validate();
  const Vector shared = NormalStream(stream_seed(spec.seed, 0)).draw(spec.n);
  const double a = std::sqrt(spec.rho);
  const double b = std::sqrt(1.0 - spec.rho);
  Matrix X(spec.n, spec.p);
  for (long j = 0; j < spec.p; ++j) {
    NormalStream column(stream_seed(spec.seed, static_cast<std::uint64_t>(j) + 1));
    for (long i = 0; i < spec.n; ++i) X(i, j) = a * shared[i] + b * column.next();
  }
  return X;
}

Vector beta_pattern(const SyntheticSpec& spec) {
  spec.validate();
  Vector beta(spec.p);
  for (long i = 1; i <= spec.p; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    double v = sign * std::exp(-2.0 * static_cast<double>(i - 1) / 20.0);
    if (spec.pattern == BetaPattern::sparse_exp && i > spec.s) v = 0.0;
    beta[i - 1] = v;
  }
  return beta;
}

double noise_scale_for_snr(const SyntheticSpec& spec, const Vector& beta) {
  if (beta.size() == 0 || beta.isZero(0.0)) throw std::invalid_argument("noise_scale_for_snr: beta is zero");
  const double sum = beta.sum();
  const double signal = (1.0 - spec.rho) * beta.squaredNorm() + spec.rho * sum * sum;
  return std::sqrt(signal / spec.snr);
}

SyntheticInstance generate(const SyntheticSpec& spec, double lambda, std::optional<double> q_override) {
  spec.validate();
  Matrix X = equicorrelated_design(spec);
  Vector beta = beta_pattern(spec);
  const double q = q_override.value_or(noise_scale_for_snr(spec, beta));
  if (!(q >= 0.0)) throw std::invalid_argument("generate: noise scale must be nonnegative");
  Vector y = X * beta;
  if (q > 0.0) {
    const Vector z = NormalStream(stream_seed(spec.seed, static_cast<std::uint64_t>(spec.p) + 1)).draw(spec.n);
    y += q * z;
  }
  return SyntheticInstance{LassoProblem(std::move(X), std::move(y), lambda), std::move(beta), q};
}

}  // namespace hslasso
