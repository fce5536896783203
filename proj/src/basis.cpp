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

#include "symmax/basis.hpp"

#include <cmath>
#include <string>

#include "symmax/errors.hpp"

namespace symmax {

namespace {

using Index = Eigen::Index;

ComplexMatrix symmetric_unit(std::size_t m, Index r, Index c) {
  const auto n = static_cast<Index>(m);
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  x(r, c) = 1.0;
  x(c, r) = 1.0;
  return x;
}

// Imaginary unit pair with value `upper` at (r, c) and its conjugate at (c, r).
ComplexMatrix imaginary_unit(std::size_t m, Index r, Index c, Complex upper) {
  const auto n = static_cast<Index>(m);
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  x(r, c) = upper;
  x(c, r) = std::conj(upper);
  return x;
}

// Spin-j angular momentum matrices in the |j, j>, |j, j-1>, ... basis.
ComplexMatrix spin_matrix(char axis, std::size_t dim) {
  const auto n = static_cast<Index>(dim);
  const double j = 0.5 * static_cast<double>(dim - 1);
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  if (axis == 'z') {
    for (Index k = 0; k < n; ++k) out(k, k) = j - static_cast<double>(k);
    return out;
  }
  // J_+ |j, mz> = sqrt(j(j+1) - mz(mz+1)) |j, mz+1>
  ComplexMatrix raise = ComplexMatrix::Zero(n, n);
  for (Index k = 1; k < n; ++k) {
    const double mz = j - static_cast<double>(k);
    raise(k - 1, k) = std::sqrt(j * (j + 1.0) - mz * (mz + 1.0));
  }
  if (axis == 'x') return 0.5 * (raise + raise.adjoint());
  return Complex(0.0, -0.5) * (raise - raise.adjoint());
}

}  // namespace

RealMatrix OperatorBasis::gram() const {
  const auto n = static_cast<Index>(elements.size());
  RealMatrix g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index k = j; k < n; ++k) {
      g(j, k) = hs_inner(elements[static_cast<std::size_t>(j)], elements[static_cast<std::size_t>(k)]);
      g(k, j) = g(j, k);
    }
  return g;
}

RealVector OperatorBasis::coefficients(const HermitianOperator& h) const {
  if (h.dim() != dim) throw DimensionError("OperatorBasis::coefficients: dimension mismatch");
  const auto n = static_cast<Index>(elements.size());
  RealVector rhs(n);
  for (Index j = 0; j < n; ++j) rhs(j) = hs_inner(elements[static_cast<std::size_t>(j)], h);
  return gram().ldlt().solve(rhs);
}

HermitianOperator OperatorBasis::combine(const RealVector& coefficients) const {
  if (static_cast<std::size_t>(coefficients.size()) != elements.size()) {
    throw DimensionError("OperatorBasis::combine: coefficient count mismatch");
  }
  HermitianOperator out = HermitianOperator::zero(dim);
  for (std::size_t j = 0; j < elements.size(); ++j) {
    out = out + coefficients(static_cast<Index>(j)) * elements[j];
  }
  return out;
}

OperatorBasis gell_mann_basis(std::size_t m) {
  if (m < 2) throw DomainError("gell_mann_basis: dimension must be at least 2");
  OperatorBasis basis;
  basis.dim = m;
  basis.elements.reserve(m * m);
  basis.elements.push_back(HermitianOperator::identity(m));
  basis.labels.emplace_back("I");

  const auto n = static_cast<Index>(m);
  for (Index k = 1; k < n; ++k) {
    for (Index j = 0; j < k; ++j) {
      basis.elements.emplace_back(symmetric_unit(m, j, k));
      basis.elements.emplace_back(imaginary_unit(m, j, k, Complex(0.0, -1.0)));
    }
    ComplexMatrix diag = ComplexMatrix::Zero(n, n);
    const double kd = static_cast<double>(k);
    const double norm = std::sqrt(2.0 / (kd * (kd + 1.0)));
    for (Index l = 0; l < k; ++l) diag(l, l) = norm;
    diag(k, k) = -kd * norm;
    basis.elements.emplace_back(diag);
  }
  for (std::size_t j = 1; j < basis.elements.size(); ++j) {
    basis.labels.push_back("gm_" + std::to_string(j));
  }
  return basis;
}

OperatorBasis two_qubit_paper_basis() {
  constexpr std::size_t m = 4;
  OperatorBasis basis;
  basis.dim = m;
  for (Index d = 0; d < 4; ++d) {
    ComplexMatrix unit = ComplexMatrix::Zero(4, 4);
    unit(d, d) = 1.0;
    basis.elements.emplace_back(unit);
  }
  for (Index r = 0; r < 4; ++r) {
    for (Index c = r + 1; c < 4; ++c) {
      basis.elements.emplace_back(symmetric_unit(m, r, c));
      basis.elements.emplace_back(imaginary_unit(m, r, c, Complex(0.0, 1.0)));
    }
  }
  for (std::size_t j = 1; j <= basis.elements.size(); ++j) {
    basis.labels.push_back("O_" + std::to_string(j));
  }
  return basis;
}

const std::vector<std::string>& named_operator_names() {
  static const std::vector<std::string> names = {"identity", "sigma_x", "sigma_y", "sigma_z",
                                                 "J_x",      "J_y",     "J_z"};
  return names;
}

std::size_t named_fixed_dim(std::string_view name) {
  if (name == "sigma_x" || name == "sigma_y" || name == "sigma_z") return 2;
  if (name == "identity" || name == "J_x" || name == "J_y" || name == "J_z" || name == "swap") {
    return 0;
  }
  throw LookupError("unknown operator name '" + std::string(name) + "'");
}

HermitianOperator named_operator(std::string_view name, std::size_t dim) {
  if (name == "swap") {
    throw LookupError("'swap' is a unitary preset, not a Hermitian observable preset");
  }
  return HermitianOperator(named_matrix(name, dim));
}

ComplexMatrix named_matrix(std::string_view name, std::size_t dim) {
  const std::size_t fixed = named_fixed_dim(name);
  if (dim == 0) throw DomainError("named operator '" + std::string(name) + "': dimension must be positive");
  if (fixed != 0 && fixed != dim) {
    throw DomainError("named operator '" + std::string(name) + "' has dimension " +
                      std::to_string(fixed) + ", requested " + std::to_string(dim));
  }
  const auto n = static_cast<Index>(dim);
  if (name == "identity") return ComplexMatrix::Identity(n, n);
  if (name == "sigma_x") return symmetric_unit(2, 0, 1);
  if (name == "sigma_y") return imaginary_unit(2, 0, 1, Complex(0.0, -1.0));
  if (name == "sigma_z") {
    ComplexMatrix z = ComplexMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return z;
  }
  if (name == "swap") {
    const auto side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(dim))));
    if (side * side != n || side < 2) {
      throw DomainError("'swap' needs a square dimension n*n with n >= 2, got " + std::to_string(dim));
    }
    ComplexMatrix s = ComplexMatrix::Zero(n, n);
    for (Index a = 0; a < side; ++a)
      for (Index b = 0; b < side; ++b) s(b * side + a, a * side + b) = 1.0;
    return s;
  }
  if (dim < 2) throw DomainError("spin operators need dimension >= 2");
  return spin_matrix(name.back(), dim);
}

}  // namespace symmax
