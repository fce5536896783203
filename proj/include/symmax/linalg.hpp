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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace symmax {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Largest absolute entry, the max-norm used by every tolerance in the library.
double max_abs(const ComplexMatrix& m);

/// True when every entry is finite.
bool all_finite(const ComplexMatrix& m);

/// ‖U U† − I‖_max ≤ tol for a square matrix.
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// Dense Hermitian matrix. Construction checks squareness, finiteness and
/// max |h(j,k) − conj(h(k,j))| ≤ 1e-12 (1 + max |h|); the stored entries are
/// then symmetrized exactly.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m);

  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator-() const;
  HermitianOperator operator*(double s) const;
  friend HermitianOperator operator*(double s, const HermitianOperator& h) {
    return h * s;
  }

  /// Frobenius norm, i.e. sqrt(Tr(h h)).
  double hs_norm() const { return m_.norm(); }

 private:
  struct Trusted {};
  HermitianOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
  friend HermitianOperator hermitian_part(const ComplexMatrix& a);

  ComplexMatrix m_;
};

/// (a + a†)/2, always Hermitian.
HermitianOperator hermitian_part(const ComplexMatrix& a);

/// Spectral decomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvectors as the columns of a unitary matrix.
struct Eigendecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Tr(a b). Real for Hermitian arguments.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

/// a b − b a.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic Jacobi diagonalization. Each eigenvector is phased so that its
/// largest-magnitude component is real positive (first index wins ties).
Eigendecomposition eig_hermitian(const HermitianOperator& h);

/// Eigenvalues only, ascending.
RealVector eigvals_hermitian(const HermitianOperator& h);

/// U diag(exp(d)) U†. Throws OverflowError when max eigenvalue > 700.
HermitianOperator expm_hermitian(const HermitianOperator& h);

/// U diag(f(d)) U† for a real function of the spectrum.
template <typename F>
HermitianOperator spectral_map(const Eigendecomposition& e, F&& f) {
  const Eigen::Index n = e.eigenvalues.size();
  RealVector mapped(n);
  for (Eigen::Index j = 0; j < n; ++j) mapped(j) = f(e.eigenvalues(j));
  ComplexMatrix out = e.eigenvectors * mapped.cast<Complex>().asDiagonal() *
                      e.eigenvectors.adjoint();
  return hermitian_part(out);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace symmax
