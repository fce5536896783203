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
#include <vector>

#include "symmax/options.hpp"
#include "symmax/symmetry.hpp"

namespace symmax {

/// Finite classical MaxEnt problem: m outcomes, n observables A_i(j) with
/// prescribed means a_i, and an optional permutation symmetry.
struct ClassicalProblem {
  std::size_t outcomes = 0;
  std::vector<std::vector<double>> observables;
  std::vector<double> targets;
  std::vector<Permutation> symmetry;
};

/// The problem rewritten over orbits: Ã_i(l) = (1/d_l) Σ_{j∈J_l} A_i(j).
struct ReducedProblem {
  OrbitPartition partition;
  std::vector<std::vector<double>> reduced_observables;  // n rows of r entries
  std::vector<double> targets;
};

struct ClassicalSolution {
  std::vector<double> probabilities;
  std::vector<double> orbit_probabilities;
  std::vector<double> multipliers;
  double log_partition = 0.0;
  double entropy = 0.0;
  std::vector<double> residuals;
  OrbitPartition partition;
  std::size_t iterations = 0;
  SolverStatus status = SolverStatus::MaxIterations;
};

/// Throws DomainError on malformed or non-finite input.
void validate(const ClassicalProblem& p);

ReducedProblem reduce_problem(const ClassicalProblem& p);

/// Damped Newton on D(λ) = ln Z(λ) − Σ λ_i a_i with
/// Z = Σ_l d_l exp(Σ_i λ_i Ã_i(l)).
ClassicalSolution solve_classical(const ClassicalProblem& p, const SolverOptions& opts = {});

/// ln Z and ∂ ln Z/∂λ_i of the reduced problem at λ.
struct ClassicalDualValue {
  double log_partition = 0.0;
  std::vector<double> gradient;
};
ClassicalDualValue classical_log_partition(const ReducedProblem& r, const std::vector<double>& lambda);

/// −Σ p ln p with 0 ln 0 = 0.
double shannon_entropy(const std::vector<double>& p);

}  // namespace symmax
