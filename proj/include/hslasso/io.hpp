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

#ifndef HSLASSO_IO_HPP
#define HSLASSO_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "hslasso/hs_solver.hpp"
#include "hslasso/problem.hpp"

namespace hslasso {

// JSON problem document: {"n", "p", "lambda", "y": [...], "X": [[row], ...]}.
nlohmann::json problem_to_json(const LassoProblem& problem);
LassoProblem problem_from_json(const nlohmann::json& doc);

// Binary problem file, little-endian: "LSSO", u32 n, u32 p, f64 lambda
// (20 bytes), then y (n doubles), then X column-major (n*p doubles).
void write_problem_binary(const std::filesystem::path& path, const LassoProblem& problem);
LassoProblem read_problem_binary(const std::filesystem::path& path);

/// Dispatches on the ".json" extension; anything else is read as binary.
LassoProblem load_problem(const std::filesystem::path& path);
void save_problem(const std::filesystem::path& path, const LassoProblem& problem);

/// Keys mirror HSConfig fields; inner is {"mode", "count", "tol"}. Missing keys
/// keep their defaults, unknown keys are rejected.
HSConfig hs_config_from_json(const nlohmann::json& doc);
nlohmann::json hs_config_to_json(const HSConfig& config);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace hslasso

#endif  // HSLASSO_IO_HPP
