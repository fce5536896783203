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
#include <optional>
#include <string>
#include <vector>

#include "symmax/basis.hpp"
#include "symmax/density_matrix.hpp"
#include "symmax/options.hpp"
#include "symmax/symmetry.hpp"

namespace symmax {

/// Quantum MaxEnt problem: observables Â_i with means a_i, an optional
/// symmetry, and the operator basis its constraints are compiled against.
struct QuantumProblem {
  std::size_t dim = 0;
  std::vector<HermitianOperator> observables;
  std::vector<double> targets;
  std::optional<SymmetrySpec> symmetry;
  OperatorBasis basis;
};

struct SolverReport {
  DensityMatrix state = DensityMatrix::maximally_mixed(1);
  std::vector<double> lambda;  // observable multipliers
  std::vector<double> gamma;   // symmetry-constraint multipliers
  std::vector<std::string> labels;  // one per multiplier, observables first
  double log_partition = 0.0;
  double entropy = 0.0;
  std::vector<double> residuals;  // |Tr(ρ C_c) − t_c|, same order as labels
  double invariance = 0.0;
  std::size_t iterations = 0;
  SolverStatus status = SolverStatus::MaxIterations;
  std::string solver;
};

struct GibbsState {
  DensityMatrix state = DensityMatrix::maximally_mixed(1);
  double log_partition = 0.0;
};

/// ρ = exp(Σ θ_c C_c) / Z computed spectrally after shifting the exponent by
/// its largest eigenvalue.
GibbsState gibbs_state(const std::vector<HermitianOperator>& operators,
                       const std::vector<double>& multipliers);

struct LogPartitionGradient {
  double log_partition;
  std::vector<double> gradient;  // Tr(ρ(θ) C_c)
};
LogPartitionGradient log_partition_gradient(const std::vector<HermitianOperator>& operators,
                                            const std::vector<double>& multipliers);

/// von Neumann entropy −Σ w ln w in nats.
double entropy_vn(const DensityMatrix& rho);

/// Observables first, then the compiled symmetry constraints. Throws on
/// dimension mismatch or on a permutation symmetry.
ConstraintSet merged_constraints(const QuantumProblem& p);

/// Per-observable feasibility against the commutant-projected spectrum.
struct FeasibilityCheck {
  bool feasible = true;
  bool on_boundary = false;
  std::vector<double> lower;  // λ_min of the projected observable
  std::vector<double> upper;
};
FeasibilityCheck check_feasibility(const QuantumProblem& p);

/// Convex dual minimization: gradient descent with Armijo backtracking for
/// the first iterations, BFGS afterwards.
SolverReport solve_dual(const QuantumProblem& p, const SolverOptions& opts = {});

/// Residual minimization Δ(θ) = Σ_c (Tr(ρ(θ) C_c) − t_c)² with a
/// finite-difference Jacobian and seeded random restarts.
SolverReport solve_delta(const QuantumProblem& p, const SolverOptions& opts = {});

}  // namespace symmax
