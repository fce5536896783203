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
#include <string>
#include <string_view>
#include <vector>

#include "symmax/linalg.hpp"

namespace symmax {

/// An ordered Hermitian basis of the m×m complex matrices, m² elements.
struct OperatorBasis {
  std::size_t dim = 0;
  std::vector<HermitianOperator> elements;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }

  /// G(j, k) = Tr(O_j O_k).
  RealMatrix gram() const;

  /// Real coefficients c with h = Σ_j c_j O_j, solved through the Gram matrix.
  RealVector coefficients(const HermitianOperator& h) const;

  HermitianOperator combine(const RealVector& coefficients) const;
};

/// Identity followed by the m²−1 generalized Gell-Mann matrices, ordered so
/// that m = 2 gives the Pauli matrices and m = 3 gives λ_1..λ_8.
/// Non-identity elements satisfy Tr(λ_j λ_k) = 2 δ_jk.
OperatorBasis gell_mann_basis(std::size_t m);

/// The 16 elementary Hermitian 4×4 matrices O_1..O_16: four diagonal units,
/// then for each pair (r, c) with r < c a symmetric unit pair followed by an
/// imaginary pair with +i at (r, c).
OperatorBasis two_qubit_paper_basis();

/// Preset operators: "identity" (any dim), "sigma_x", "sigma_y", "sigma_z"
/// (dim 2), "J_x", "J_y", "J_z" (spin (dim−1)/2, ħ = 1).
HermitianOperator named_operator(std::string_view name, std::size_t dim);

/// Names recognised by named_operator.
const std::vector<std::string>& named_operator_names();

/// Presets that are unitary but not necessarily Hermitian ("swap" on n², and
/// everything named_operator knows).
ComplexMatrix named_matrix(std::string_view name, std::size_t dim);

/// Whether a preset has a fixed dimension; returns 0 for dimension-generic names.
std::size_t named_fixed_dim(std::string_view name);

}  // namespace symmax
