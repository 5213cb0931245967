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

#include "hslasso/io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <set>
#include <stdexcept>

namespace hslasso {

namespace {

static_assert(std::endian::native == std::endian::little, "binary problem format assumes a little-endian host");

template <typename T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw std::runtime_error("truncated problem file");
  return value;
}

std::string inner_mode_name(InnerStopMode m) {
  switch (m) {
    case InnerStopMode::theoretical: return "theoretical";
    case InnerStopMode::fixed: return "fixed";
    case InnerStopMode::gradient: return "gradient";
  }
  return "fixed";
}

std::string outer_mode_name(OuterStopMode m) {
  switch (m) {
    case OuterStopMode::oracle: return "oracle";
    case OuterStopMode::theoretical_count: return "theoretical_count";
    case OuterStopMode::t_floor: return "t_floor";
  }
  return "oracle";
}

}  // namespace

nlohmann::json problem_to_json(const LassoProblem& problem) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < problem.n(); ++i) {
    std::vector<double> row(problem.p());
    for (Index j = 0; j < problem.p(); ++j) row[j] = problem.X()(i, j);
    rows.push_back(std::move(row));
  }
  return {{"n", problem.n()},
          {"p", problem.p()},
          {"lambda", problem.lambda()},
          {"y", std::vector<double>(problem.y().begin(), problem.y().end())},
          {"X", std::move(rows)}};
}

LassoProblem problem_from_json(const nlohmann::json& doc) {
  const auto n = doc.at("n").get<long>();
  const auto p = doc.at("p").get<long>();
  if (n < 1 || p < 1) throw std::invalid_argument("problem JSON: n and p must be >= 1");
  const auto y = doc.at("y").get<std::vector<double>>();
  const auto& rows = doc.at("X");
  if (static_cast<long>(y.size()) != n || !rows.is_array() || static_cast<long>(rows.size()) != n) {
    throw std::invalid_argument("problem JSON: dimensions do not match n");
  }
  Matrix X(n, p);
  for (long i = 0; i < n; ++i) {
    const auto row = rows[i].get<std::vector<double>>();
    if (static_cast<long>(row.size()) != p) throw std::invalid_argument("problem JSON: row length does not match p");
    for (long j = 0; j < p; ++j) X(i, j) = row[j];
  }
  return LassoProblem(std::move(X), Eigen::Map<const Vector>(y.data(), n), doc.at("lambda").get<double>());
}

void write_problem_binary(const std::filesystem::path& path, const LassoProblem& problem) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out.write("LSSO", 4);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(problem.n()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(problem.p()));
  put<double>(out, problem.lambda());
  out.write(reinterpret_cast<const char*>(problem.y().data()),
            static_cast<std::streamsize>(sizeof(double) * problem.n()));
  out.write(reinterpret_cast<const char*>(problem.X().data()),
            static_cast<std::streamsize>(sizeof(double) * problem.n() * problem.p()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

LassoProblem read_problem_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), 4);
  if (!in || std::memcmp(magic.data(), "LSSO", 4) != 0) throw std::runtime_error("bad magic in " + path.string());
  const auto n = get<std::uint32_t>(in);
  const auto p = get<std::uint32_t>(in);
  const auto lambda = get<double>(in);
  if (n == 0 || p == 0) throw std::runtime_error("empty problem in " + path.string());
  Vector y(n);
  Matrix X(n, p);
  in.read(reinterpret_cast<char*>(y.data()), static_cast<std::streamsize>(sizeof(double) * n));
  in.read(reinterpret_cast<char*>(X.data()), static_cast<std::streamsize>(sizeof(double) * n * p));
  if (!in) throw std::runtime_error("truncated problem file " + path.string());
  return LassoProblem(std::move(X), std::move(y), lambda);
}

LassoProblem load_problem(const std::filesystem::path& path) {
  if (path.extension() == ".json") return problem_from_json(read_json_file(path));
  return read_problem_binary(path);
}

void save_problem(const std::filesystem::path& path, const LassoProblem& problem) {
  if (path.extension() == ".json") {
    write_json_file(path, problem_to_json(problem));
  } else {
    write_problem_binary(path, problem);
  }
}

HSConfig hs_config_from_json(const nlohmann::json& doc) {
  static const std::set<std::string> known{"t0",    "h",     "epsilon",   "B",        "tau",
                                           "inner", "outer", "max_outer", "max_inner"};
  if (!doc.is_object()) throw std::invalid_argument("HS config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw std::invalid_argument("unknown HS config key: " + key);
  }
  HSConfig c;
  if (doc.contains("t0") && !doc["t0"].is_null()) c.t0 = doc["t0"].get<double>();
  if (doc.contains("B") && !doc["B"].is_null()) c.B = doc["B"].get<double>();
  c.h = doc.value("h", c.h);
  c.epsilon = doc.value("epsilon", c.epsilon);
  c.tau = doc.value("tau", c.tau);
  c.max_outer = doc.value("max_outer", c.max_outer);
  c.max_inner = doc.value("max_inner", c.max_inner);
  if (doc.contains("inner")) {
    const auto& in = doc["inner"];
    const std::string mode = in.value("mode", inner_mode_name(c.inner.mode));
    if (mode == "theoretical") {
      c.inner.mode = InnerStopMode::theoretical;
    } else if (mode == "fixed") {
      c.inner.mode = InnerStopMode::fixed;
    } else if (mode == "gradient") {
      c.inner.mode = InnerStopMode::gradient;
    } else {
      throw std::invalid_argument("unknown inner mode: " + mode);
    }
    c.inner.count = in.value("count", c.inner.count);
    c.inner.tol = in.value("tol", c.inner.tol);
  }
  if (doc.contains("outer")) {
    const auto mode = doc["outer"].get<std::string>();
    if (mode == "oracle") {
      c.outer = OuterStopMode::oracle;
    } else if (mode == "theoretical_count") {
      c.outer = OuterStopMode::theoretical_count;
    } else if (mode == "t_floor") {
      c.outer = OuterStopMode::t_floor;
    } else {
      throw std::invalid_argument("unknown outer mode: " + mode);
    }
  }
  return c;
}

nlohmann::json hs_config_to_json(const HSConfig& c) {
  nlohmann::json doc{{"h", c.h},
                     {"epsilon", c.epsilon},
                     {"tau", c.tau},
                     {"inner", {{"mode", inner_mode_name(c.inner.mode)}, {"count", c.inner.count}, {"tol", c.inner.tol}}},
                     {"outer", outer_mode_name(c.outer)},
                     {"max_outer", c.max_outer},
                     {"max_inner", c.max_inner}};
  doc["t0"] = c.t0 ? nlohmann::json(*c.t0) : nlohmann::json(nullptr);
  doc["B"] = c.B ? nlohmann::json(*c.B) : nlohmann::json(nullptr);
  return doc;
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << doc.dump(2) << '\n';
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return nlohmann::json::parse(in);
}

}  // namespace hslasso
