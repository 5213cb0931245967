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

#ifndef HSLASSO_DATAGEN_HPP
#define HSLASSO_DATAGEN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "hslasso/problem.hpp"

namespace hslasso {

enum class BetaPattern { dense_exp, sparse_exp };

std::string pattern_name(BetaPattern pattern);
BetaPattern parse_pattern(const std::string& name);

struct SyntheticSpec {
  long n = 50;
  long p = 20;
  double rho = 0.1;
  double snr = 3.0;
  BetaPattern pattern = BetaPattern::dense_exp;
  long s = 10;  // sparse_exp only
  std::uint64_t seed = 0;

  void validate() const;
};

/// Named scenarios: "sim1" (dense_exp) and "sim2" (sparse_exp, s = 10),
/// both rho = 0.1 and snr = 3.
SyntheticSpec scenario(const std::string& name, long n, long p, std::uint64_t seed);

// Random streams. Stream k of a run with seed S is an mt19937_64 seeded with
// splitmix64(S ^ splitmix64(k)). Stream 0 drives the shared row factor,
// stream j+1 drives column j, stream p+1 drives the noise. Normals come from
// the Box-Muller transform on 53-bit uniforms, so draws do not depend on the
// standard library's distribution implementation.
inline constexpr const char* kRngIdentifier = "mt19937_64/splitmix64-streams/box-muller";

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}
  double next();
  Vector draw(long count);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Matrix equicorrelated_design(const SyntheticSpec& spec);
Vector beta_pattern(const SyntheticSpec& spec);

/// sqrt(beta' Sigma beta / snr) for the equicorrelated population Sigma.
double noise_scale_for_snr(const SyntheticSpec& spec, const Vector& beta);

struct SyntheticInstance {
  LassoProblem problem;
  Vector beta_true;
  double q = 0.0;
};

/// y = X beta + q z. q_override replaces the SNR-calibrated scale (0 gives a
/// noiseless response).
SyntheticInstance generate(const SyntheticSpec& spec, double lambda = 1e-3,
                           std::optional<double> q_override = std::nullopt);

}  // namespace hslasso

#endif  // HSLASSO_DATAGEN_HPP
