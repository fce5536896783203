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

#include "symmax/linalg.hpp"

namespace symmax {

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-12), eigenvalues ≥ −1e-10 and |Tr − 1| ≤ 1e-12.
  /// Throws DomainError otherwise.
  explicit DensityMatrix(const ComplexMatrix& m);

  /// I/m.
  static DensityMatrix maximally_mixed(std::size_t dim);

  /// U diag(w) U† for a unitary U and a probability vector w. Valid by
  /// construction; the weights are renormalized to sum to one.
  static DensityMatrix from_spectrum(const ComplexMatrix& eigenvectors, const RealVector& weights);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  /// Tr(ρ A).
  double expectation(const HermitianOperator& a) const;

 private:
  DensityMatrix() = default;
  ComplexMatrix m_;
};

}  // namespace symmax
