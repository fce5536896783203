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
#include <variant>
#include <vector>

#include "symmax/basis.hpp"
#include "symmax/density_matrix.hpp"
#include "symmax/linalg.hpp"

namespace symmax {

/// A bijection on {0, …, m−1}; image[j] is where j goes.
class Permutation {
 public:
  /// Throws DomainError unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  /// Builds a permutation of m points from disjoint 1-based cycles.
  static Permutation from_cycles(const std::vector<std::vector<std::size_t>>& cycles, std::size_t m);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t j) const { return image_[j]; }
  const std::vector<std::size_t>& image() const { return image_; }

  /// 1-based cycles of length ≥ 2, each starting at its smallest member.
  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

struct LieSymmetry {
  std::vector<HermitianOperator> generators;
};

/// Unitary generators of a finite group, each checked to 1e-10 on construction.
struct FiniteGroupSymmetry {
  explicit FiniteGroupSymmetry(std::vector<ComplexMatrix> unitaries);
  std::vector<ComplexMatrix> unitaries;
};

struct PermutationSymmetry {
  std::vector<Permutation> generators;
};

using SymmetrySpec = std::variant<LieSymmetry, FiniteGroupSymmetry, PermutationSymmetry>;

/// Where a compiled constraint came from.
struct ConstraintOrigin {
  enum class Kind { Observable, Symmetry };
  enum class Part { Whole, Hermitian, AntiHermitian };

  Kind kind = Kind::Symmetry;
  std::size_t index = 0;        // observable index, or generator index k
  std::size_t basis_index = 0;  // basis element j (symmetry only)
  Part part = Part::Whole;

  std::string label(const OperatorBasis* basis = nullptr) const;

  friend bool operator==(const ConstraintOrigin&, const ConstraintOrigin&) = default;
};

/// Linear constraints Tr(ρ C_c) = target_c. After compilation the operators
/// are HS-orthonormal and every symmetry-derived target is zero.
struct ConstraintSet {
  std::size_t dim = 0;
  std::vector<HermitianOperator> operators;
  std::vector<double> targets;
  std::vector<ConstraintOrigin> provenance;

  std::size_t size() const { return operators.size(); }
  bool empty() const { return operators.empty(); }
};

/// Orbits of a permutation group on {0, …, m−1}, sorted by smallest member.
struct OrbitPartition {
  std::size_t m = 0;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> degeneracies;

  std::size_t size() const { return orbits.size(); }
  /// orbit_of[j] is the orbit index containing outcome j.
  std::vector<std::size_t> orbit_of() const;
};

/// Modified Gram-Schmidt (two passes) under the HS inner product. Operators
/// whose residual norm after projection is ≤ 1e-10 are dropped.
ConstraintSet orthonormalize_constraints(const std::vector<HermitianOperator>& raw, std::size_t dim);
ConstraintSet orthonormalize_constraints(const std::vector<HermitianOperator>& raw,
                                         const std::vector<ConstraintOrigin>& origins,
                                         std::size_t dim);

/// Constraints Tr(ρ [iQ_k, O_j]) = 0 for every generator and basis element,
/// reduced to an orthonormal independent set.
ConstraintSet compile_lie_constraints(const std::vector<HermitianOperator>& generators,
                                      const OperatorBasis& basis);

/// Constraints equivalent to [ρ, U_k] = 0: the Hermitian and anti-Hermitian
/// parts of [iU_k, O_j] each yield a real constraint.
ConstraintSet compile_finite_group_constraints(const std::vector<ComplexMatrix>& unitaries,
                                               const OperatorBasis& basis);

/// Dispatches on the spec kind. Permutation specs throw DomainError.
ConstraintSet compile_constraints(const SymmetrySpec& spec, const OperatorBasis& basis);

/// Orbits of the group generated by `permutations`, by union-find.
OrbitPartition orbits(const std::vector<Permutation>& permutations, std::size_t m);

/// HS-orthogonal projection onto the Hermitian commutant of the generators.
HermitianOperator commutant_project(const HermitianOperator& a, const SymmetrySpec& spec);

/// Orthonormal (HS) basis of the Hermitian commutant.
std::vector<HermitianOperator> commutant_basis(const SymmetrySpec& spec, std::size_t dim);

/// Zero exactly when ρ is invariant. For permutation specs ρ must be diagonal.
double invariance_residual(const DensityMatrix& rho, const SymmetrySpec& spec);

/// Dimension the spec acts on (0 for an empty generator list).
std::size_t symmetry_dim(const SymmetrySpec& spec);

}  // namespace symmax
