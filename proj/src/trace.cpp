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

#include "hslasso/trace.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace hslasso {

std::string method_name(Method m) {
  switch (m) {
    case Method::ista: return "ISTA";
    case Method::fista: return "FISTA";
    case Method::cd: return "CD";
    case Method::sl: return "SL";
    case Method::hs: return "HS";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "ista") return Method::ista;
  if (s == "fista") return Method::fista;
  if (s == "cd") return Method::cd;
  if (s == "sl") return Method::sl;
  if (s == "hs") return Method::hs;
  throw std::invalid_argument("unknown method: " + name);
}

void write_trace_csv(const SolverTrace& trace, std::ostream& out) {
  out << "k,t_k,inner_iters,F,F_t,ops\n";
  char line[256];
  for (const auto& r : trace.records) {
    std::snprintf(line, sizeof line, "%ld,%.17g,%ld,%.17g,%.17g,%llu\n", r.k, r.t_k, r.inner_iters, r.F, r.F_t,
                  static_cast<unsigned long long>(r.ops.total()));
    out << line;
  }
}

std::optional<std::size_t> first_hit(const SolverTrace& trace, double f_min, double epsilon) {
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    if (trace.records[i].F - f_min <= epsilon) return i;
  }
  return std::nullopt;
}

}  // namespace hslasso
