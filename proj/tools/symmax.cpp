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

#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "symmax/cli/commands.hpp"
#include "symmax/version.hpp"

int main(int argc, char** argv) {
  using namespace symmax::cli;

  CLI::App app{"Maximum-entropy state inference with symmetry constraints"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("symmax ") + symmax::kVersion);

  std::vector<std::string> paths;
  SolveSettings settings;
  auto* solve = app.add_subcommand("solve", "Solve one or more problem files and write JSON reports");
  solve->add_option("paths", paths, "Problem files")->required()->check(CLI::ExistingFile);
  solve->add_option("--out", settings.out, "Report file (one input) or directory (several inputs)");
  solve->add_option("--solver", settings.method, "dual or delta")
      ->capture_default_str()
      ->check(CLI::IsMember({"dual", "delta"}));
  solve->add_option("--tol", settings.solver.tol, "Dual gradient tolerance")->capture_default_str();
  solve->add_option("--max-iter", settings.solver.max_iterations, "Iteration cap")->capture_default_str();
  solve->add_option("--cap", settings.solver.multiplier_cap, "Multiplier cap")->capture_default_str();
  solve->add_option("--seed", settings.solver.seed, "Seed for delta restarts")->capture_default_str();
  solve->add_option("--restarts", settings.solver.restarts, "Random restarts for delta")->capture_default_str();
  solve->add_option("--jobs", settings.jobs, "Files solved concurrently")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string check_path;
  auto* check = app.add_subcommand("check", "Validate a problem file and summarize its constraints");
  check->add_option("path", check_path, "Problem file")->required();

  std::string basis_kind;
  std::size_t basis_dim = 0;
  auto* basis = app.add_subcommand("basis", "Print an operator basis as JSON");
  basis->add_option("kind", basis_kind, "gell_mann or two_qubit_paper")->required();
  basis->add_option("dim", basis_dim, "Dimension")->required();

  auto* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const Style style{std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO) != 0};
  if (*solve) return cmd_solve(paths, settings, std::cout, std::cerr, style);
  if (*check) {
    const Style out_style{std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0};
    return cmd_check(check_path, std::cout, std::cerr, out_style);
  }
  if (*basis) return cmd_basis(basis_kind, basis_dim, std::cout, std::cerr);
  if (*version) {
    std::cout << "symmax " << symmax::kVersion << "\n";
    return kOk;
  }
  return kInputError;
}
