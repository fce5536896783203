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

#include "symmax/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "symmax/errors.hpp"

namespace symmax {

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiSweepCap = 100;
constexpr double kExpOverflow = 700.0;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dims(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows()) {
    throw DimensionError(std::string(what) + ": dimension mismatch " +
                         std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
  }
}

// Rotates the (p, q) plane of a Hermitian matrix so that a(p, q) vanishes.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  const Complex phase = apq / r;
  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
  const Complex g00 = c;
  const Complex g01 = s;
  const Complex g10 = -s * std::conj(phase);
  const Complex g11 = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g00 + akq * g10;
    a(k, q) = akp * g01 + akq * g11;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
    a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g00 + vkq * g10;
    v(k, q) = vkp * g01 + vkq * g11;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.size(); ++j) {
    const Complex z = m.data()[j];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols() || u.rows() == 0) return false;
  const ComplexMatrix eye = ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs(u * u.adjoint() - eye) <= tol;
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m) {
  require_square(m, "HermitianOperator");
  if (!all_finite(m)) throw DomainError("HermitianOperator: non-finite entry");
  const double asym = max_abs(m - m.adjoint());
  if (asym > 1e-12 * (1.0 + max_abs(m))) {
    throw DomainError("HermitianOperator: matrix is not Hermitian (max |h - h^dagger| = " +
                      std::to_string(asym) + ")");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Zero(n, n), Trusted{});
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Identity(n, n), Trusted{});
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  require_same_dims(m_, other.m_, "HermitianOperator::operator+");
  return HermitianOperator(m_ + other.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  require_same_dims(m_, other.m_, "HermitianOperator::operator-");
  return HermitianOperator(m_ - other.m_, Trusted{});
}

HermitianOperator HermitianOperator::operator-() const {
  return HermitianOperator(-m_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(s * m_, Trusted{});
}

HermitianOperator hermitian_part(const ComplexMatrix& a) {
  require_square(a, "hermitian_part");
  return HermitianOperator(0.5 * (a + a.adjoint()), HermitianOperator::Trusted{});
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dims(a.matrix(), b.matrix(), "hs_inner");
  // Tr(ab) = sum_jk a_jk b_kj = sum_jk a_jk conj(b_jk) for Hermitian b.
  return (a.matrix().array() * b.matrix().array().conjugate()).sum().real();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dims(a, b, "commutator");
  return a * b - b * a;
}

Eigendecomposition eig_hermitian(const HermitianOperator& h) {
  ComplexMatrix a = h.matrix();
  const Eigen::Index n = a.rows();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = max_abs(a);
  if (scale > 0.0) {
    const double threshold = kJacobiThreshold * scale;
    bool converged = false;
    for (int sweep = 0; sweep < kJacobiSweepCap; ++sweep) {
      double off = 0.0;
      for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
      if (off <= threshold) {
        converged = true;
        break;
      }
      for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          if (std::abs(a(p, q)) > threshold) jacobi_rotate(a, v, p, q);
        }
      }
    }
    if (!converged) {
      throw NumericalError("eig_hermitian: Jacobi sweeps did not converge");
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });

  Eigendecomposition out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.eigenvalues(j) = a(src, src).real();
    auto col = v.col(src);
    const double biggest = col.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (std::abs(col(k)) >= biggest * (1.0 - 1e-12)) {
        pivot = k;
        break;
      }
    }
    const Complex phase = std::conj(col(pivot)) / std::abs(col(pivot));
    out.eigenvectors.col(j) = col * phase;
    out.eigenvectors(pivot, j) = std::abs(col(pivot));
  }
  return out;
}

RealVector eigvals_hermitian(const HermitianOperator& h) {
  return eig_hermitian(h).eigenvalues;
}

HermitianOperator expm_hermitian(const HermitianOperator& h) {
  const Eigendecomposition e = eig_hermitian(h);
  const double top = e.eigenvalues(e.eigenvalues.size() - 1);
  if (top > kExpOverflow) {
    throw OverflowError("expm_hermitian: largest eigenvalue " + std::to_string(top) +
                        " exceeds 700; shift the exponent first");
  }
  return spectral_map(e, [](double d) { return std::exp(d); });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

}  // namespace symmax
