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

// Reference solvers for the test suite. They work in the primal (entropy
// ascent over the feasible affine slice), so agreement with the dual
// solvers is evidence rather than a restatement of the same computation.

#include <functional>

#include "symmax/classical.hpp"
#include "symmax/quantum.hpp"

namespace symmax::oracle {

struct OracleResult {
  std::vector<double> probabilities;  // classical problems
  ComplexMatrix density;              // quantum problems
  double entropy = 0.0;
  double max_violation = 0.0;
  std::size_t iterations = 0;
};

/// Maximizes Shannon entropy over the simplex with the mean-value constraints
/// and explicit p_j = p_g(j) equalities. m ≤ 12, n ≤ 3.
OracleResult primal_classical(const ClassicalProblem& p);

/// Maximizes von Neumann entropy over density matrices with the mean-value
/// constraints and [ρ, G] = 0 for every symmetry generator. m ≤ 4.
OracleResult primal_quantum(const QuantumProblem& p);

/// Bisection to |hi − lo| ≤ 1e-14. Throws DomainError without a sign change.
double scalar_root(const std::function<double(double)>& f, double lo, double hi);

/// Solves X G − G X = 0 for Hermitian X over the matrix-unit basis and
/// returns an orthonormal basis of the solutions (the commutant).
std::vector<ComplexMatrix> commutant_by_matrix_units(const std::vector<ComplexMatrix>& generators,
                                                     std::size_t dim);

}  // namespace symmax::oracle
