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

#include <sstream>

#include "doctest.h"

#include "hslasso/trace.hpp"

using namespace hslasso;

TEST_CASE("method names round trip") {
  for (Method m : {Method::ista, Method::fista, Method::cd, Method::sl, Method::hs}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK(parse_method("FiStA") == Method::fista);
  CHECK_THROWS_AS(parse_method("lars"), std::invalid_argument);
}

TEST_CASE("trace csv and first hit") {
  SolverTrace tr;
  tr.method = Method::hs;
  for (long k = 0; k < 3; ++k) {
    TraceRecord r;
    r.k = k;
    r.t_k = 3.0 * (k + 1);
    r.inner_iters = k * 50;
    r.F = 1.0 / (k + 1);
    r.F_t = 0.5;
    r.ops.mults = 10 * k;
    r.ops.setup_ops = 99;
    tr.records.push_back(r);
  }
  std::ostringstream out;
  write_trace_csv(tr, out);
  CHECK(out.str() ==
        "k,t_k,inner_iters,F,F_t,ops\n"
        "0,3,0,1,0.5,0\n"
        "1,6,50,0.5,0.5,10\n"
        "2,9,100,0.33333333333333331,0.5,20\n");
  CHECK(first_hit(tr, 0.0, 0.6) == std::optional<std::size_t>(1));
  CHECK(first_hit(tr, 0.0, 0.5) == std::optional<std::size_t>(1));
  CHECK(first_hit(tr, 0.0, 2.0) == std::optional<std::size_t>(0));
  CHECK_FALSE(first_hit(tr, 0.0, 0.1).has_value());
}
