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

#ifndef HSLASSO_TRACE_HPP
#define HSLASSO_TRACE_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hslasso/opcount.hpp"
#include "hslasso/types.hpp"

namespace hslasso {

enum class Method { ista, fista, cd, sl, hs };

std::string method_name(Method m);
/// Accepts "ista", "fista", "cd", "sl", "hs" (any case).
Method parse_method(const std::string& name);

/// One row per outer iteration (HS) or per iteration / sweep (baselines).
/// Row 0 is the starting point.
struct TraceRecord {
  long k = 0;
  double t_k = 0.0;  // 0 for non-homotopy methods
  long inner_iters = 0;
  double F = 0.0;
  double F_t = 0.0;  // surrogate objective at the iterate; equals F for ISTA/FISTA/CD
  OpSnapshot ops;
};

struct SolverTrace {
  Method method = Method::ista;
  std::vector<TraceRecord> records;
  Vector final_beta;
  bool converged = false;
  /// Largest |beta_i| seen over all recorded iterates.
  double max_abs_iterate = 0.0;
  /// Some |beta_i| exceeded the configured iterate bound B (HS only).
  bool bound_violated = false;
  /// Number of coordinate evaluations that hit the guarded branch of the
  /// smooth-lasso gradient (SL only).
  long guard_events = 0;
};

/// Writes the header "k,t_k,inner_iters,F,F_t,ops" and one line per record.
/// ops is the setup-exclusive total.
void write_trace_csv(const SolverTrace& trace, std::ostream& out);

/// Index of the first record with F - f_min <= epsilon.
std::optional<std::size_t> first_hit(const SolverTrace& trace, double f_min, double epsilon);

}  // namespace hslasso

#endif  // HSLASSO_TRACE_HPP
