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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "symmax/options.hpp"

namespace symmax::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kNotConverged = 2, kInfeasible = 3 };

/// Exit code for a solver status: 0 converged, 2 boundary or iteration cap,
/// 3 infeasible.
int exit_code(SolverStatus status);

/// The more severe of two exit codes, ranking 1 > 3 > 2 > 0.
int worst_exit_code(int a, int b);

struct Style {
  bool color = false;
};

struct SolveSettings {
  SolverOptions solver;
  std::string method = "dual";  // "dual" or "delta"
  std::string out;              // file for one input, directory for several; empty for stdout
  std::size_t jobs = 1;
};

/// Solves every file, `jobs` at a time. Reports go to `out` (or the files
/// named by settings.out) in input order; one-line summaries go to `err`.
int cmd_solve(const std::vector<std::string>& paths, const SolveSettings& settings, std::ostream& out,
              std::ostream& err, Style style = {});

/// Validates a problem file and prints the compiled constraint summary.
int cmd_check(const std::string& path, std::ostream& out, std::ostream& err, Style style = {});

/// Prints a basis as JSON: kind is "gell_mann" or "two_qubit_paper".
int cmd_basis(const std::string& kind, std::size_t dim, std::ostream& out, std::ostream& err);

std::string read_file(const std::string& path);

}  // namespace symmax::cli
