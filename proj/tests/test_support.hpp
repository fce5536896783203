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

#include <cmath>
#include <random>

#include "symmax/basis.hpp"
#include "symmax/linalg.hpp"

namespace symmax::testing {

inline ComplexMatrix sigma_x() { return named_matrix("sigma_x", 2); }
inline ComplexMatrix sigma_y() { return named_matrix("sigma_y", 2); }
inline ComplexMatrix sigma_z() { return named_matrix("sigma_z", 2); }
inline ComplexMatrix eye(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix random_complex(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols,
                                    double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < m.size(); ++j) m.data()[j] = Complex(normal(rng), normal(rng));
  return m;
}

inline HermitianOperator random_hermitian(std::mt19937_64& rng, std::size_t dim, double scale = 1.0) {
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix a = random_complex(rng, n, n, scale);
  return hermitian_part(a);
}

/// Haar-ish random unitary from the QR factor of a Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rng, n, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Random full-rank density matrix.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix g = random_complex(rng, n, n);
  ComplexMatrix rho = g * g.adjoint() + 0.05 * ComplexMatrix::Identity(n, n);
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

}  // namespace symmax::testing
