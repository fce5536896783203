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

#include "symmax/density_matrix.hpp"

#include <cmath>
#include <string>

#include "symmax/errors.hpp"

namespace symmax {

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("DensityMatrix: expected a non-empty square matrix");
  }
  if (!all_finite(m)) throw DomainError("DensityMatrix: non-finite entry");
  if (max_abs(m - m.adjoint()) > 1e-12) throw DomainError("DensityMatrix: not Hermitian");
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > 1e-12) {
    throw DomainError("DensityMatrix: trace is " + std::to_string(trace) + ", expected 1");
  }
  const HermitianOperator h(m);
  const double lowest = eigvals_hermitian(h)(0);
  if (lowest < -1e-10) {
    throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
  m_ = h.matrix();
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  DensityMatrix rho;
  rho.m_ = ComplexMatrix::Identity(n, n) / static_cast<double>(dim);
  return rho;
}

DensityMatrix DensityMatrix::from_spectrum(const ComplexMatrix& eigenvectors,
                                           const RealVector& weights) {
  if (eigenvectors.rows() != eigenvectors.cols() || eigenvectors.cols() != weights.size()) {
    throw DimensionError("DensityMatrix::from_spectrum: shape mismatch");
  }
  if ((weights.array() < 0.0).any() || !weights.allFinite() || weights.sum() <= 0.0) {
    throw DomainError("DensityMatrix::from_spectrum: weights must be finite, non-negative, non-zero");
  }
  const RealVector w = weights / weights.sum();
  const ComplexMatrix m = eigenvectors * w.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  DensityMatrix rho;
  rho.m_ = 0.5 * (m + m.adjoint());
  return rho;
}

double DensityMatrix::expectation(const HermitianOperator& a) const {
  if (a.dim() != dim()) throw DimensionError("DensityMatrix::expectation: dimension mismatch");
  return (m_.array() * a.matrix().array().conjugate()).sum().real();
}

}  // namespace symmax
