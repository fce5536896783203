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

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "symmax/classical.hpp"
#include "symmax/quantum.hpp"

namespace symmax::cli {

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

struct ReportHeader {
  std::string file;    // input file name, without directories
  std::string digest;  // sha256 of the input bytes
};

nlohmann::ordered_json quantum_report(const ReportHeader& header, const QuantumProblem& problem,
                                      const SolverReport& report, const SolverOptions& opts);

nlohmann::ordered_json classical_report(const ReportHeader& header, const ClassicalProblem& problem,
                                        const ClassicalSolution& solution, const SolverOptions& opts);

/// Two-space indentation, flat containers on one line, and a trailing newline. Doubles use the shortest
/// decimal form that parses back to the same value.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace symmax::cli
