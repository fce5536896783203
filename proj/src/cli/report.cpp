// Copyright 2026 The symmax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symmax/cli/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>

#include "symmax/cli/problem_file.hpp"
#include "symmax/errors.hpp"
#include "symmax/version.hpp"

namespace symmax::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json header_json(const ReportHeader& header, std::string_view kind) {
  ordered_json j = ordered_json::object();
  j["tool"] = {{"name", "symmax"}, {"version", kVersion}};
  j["input"] = {{"file", header.file}, {"sha256", header.digest}};
  j["kind"] = kind;
  return j;
}

ordered_json options_json(const SolverOptions& opts, bool delta) {
  ordered_json j = ordered_json::object();
  j["tol"] = opts.tol;
  j["max_iterations"] = opts.max_iterations;
  j["multiplier_cap"] = opts.multiplier_cap;
  if (delta) {
    j["seed"] = opts.seed;
    j["restarts"] = opts.restarts;
    j["delta_tol"] = opts.delta_tol;
  }
  return j;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256: digest computation failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int k = 0; k < length; ++k) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

ordered_json quantum_report(const ReportHeader& header, const QuantumProblem& problem,
                            const SolverReport& report, const SolverOptions& opts) {
  ordered_json j = header_json(header, "quantum");
  j["solver"] = report.solver;
  j["options"] = options_json(opts, report.solver == "delta");
  j["status"] = to_string(report.status);
  j["dim"] = problem.dim;
  j["state"] = matrix_to_json(report.state.matrix());
  ordered_json multipliers = ordered_json::array();
  ordered_json residuals = ordered_json::array();
  const std::size_t n = report.lambda.size();
  for (std::size_t k = 0; k < report.labels.size(); ++k) {
    const bool observable = k < n;
    multipliers.push_back({{"label", report.labels[k]},
                           {"block", observable ? "lambda" : "gamma"},
                           {"value", observable ? report.lambda[k] : report.gamma[k - n]}});
    residuals.push_back({{"label", report.labels[k]}, {"value", report.residuals[k]}});
  }
  j["multipliers"] = std::move(multipliers);
  j["log_partition"] = report.log_partition;
  j["entropy"] = report.entropy;
  j["residuals"] = std::move(residuals);
  j["invariance"] = report.invariance;
  j["iterations"] = report.iterations;
  return j;
}

ordered_json classical_report(const ReportHeader& header, const ClassicalProblem& problem,
                              const ClassicalSolution& solution, const SolverOptions& opts) {
  ordered_json j = header_json(header, "classical");
  j["solver"] = "newton";
  j["options"] = options_json(opts, false);
  j["status"] = to_string(solution.status);
  j["outcomes"] = problem.outcomes;
  j["probabilities"] = solution.probabilities;
  ordered_json orbits = ordered_json::array();
  for (std::size_t l = 0; l < solution.partition.size(); ++l) {
    std::vector<std::size_t> members;
    for (std::size_t idx : solution.partition.orbits[l]) members.push_back(idx + 1);
    orbits.push_back({{"members", members}, {"probability", solution.orbit_probabilities[l]}});
  }
  j["orbits"] = std::move(orbits);
  ordered_json multipliers = ordered_json::array();
  ordered_json residuals = ordered_json::array();
  for (std::size_t i = 0; i < solution.multipliers.size(); ++i) {
    const std::string label = "obs[" + std::to_string(i) + "]";
    multipliers.push_back({{"label", label}, {"block", "lambda"}, {"value", solution.multipliers[i]}});
    residuals.push_back({{"label", label}, {"value", solution.residuals[i]}});
  }
  j["multipliers"] = std::move(multipliers);
  j["log_partition"] = solution.log_partition;
  j["entropy"] = solution.entropy;
  j["residuals"] = std::move(residuals);
  double invariance = 0.0;
  for (const auto& g : problem.symmetry)
    for (std::size_t k = 0; k < problem.outcomes; ++k)
      invariance = std::max(invariance, std::abs(solution.probabilities[g(k)] - solution.probabilities[k]));
  j["invariance"] = invariance;
  j["iterations"] = solution.iterations;
  return j;
}

namespace {

bool is_flat(const ordered_json& j) {
  if (j.is_object()) {
    return std::all_of(j.begin(), j.end(), [](const ordered_json& x) { return x.is_primitive(); });
  }
  if (!j.is_array()) return true;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !std::all_of(e.begin(), e.end(), [](const ordered_json& x) { return x.is_primitive(); })) {
      return false;
    }
  }
  return true;
}

// Scalar-only objects and arrays, and arrays of scalar arrays such as matrix
// rows of [re, im] pairs, stay on one line.
void write(const ordered_json& j, int depth, std::string& out) {
  if (is_flat(j)) {
    if (j.is_primitive()) {
      out += j.dump();
      return;
    }
    const bool object = j.is_object();
    out += object ? '{' : '[';
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      if (k) out += ", ";
      if (object) out += ordered_json(it.key()).dump() + ": ";
      write(*it, depth, out);
    }
    out += object ? '}' : ']';
    return;
  }
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const bool object = j.is_object();
  out += object ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    if (k) out += ",\n";
    out += pad;
    if (object) out += ordered_json(it.key()).dump() + ": ";
    write(*it, depth + 1, out);
  }
  if (j.empty()) {
    out.pop_back();
  } else {
    out += '\n' + std::string(static_cast<std::size_t>(2 * depth), ' ');
  }
  out += object ? '}' : ']';
}

}  // namespace

std::string dump(const ordered_json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

}  // namespace symmax::cli
