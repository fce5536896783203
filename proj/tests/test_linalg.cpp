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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "symmax/basis.hpp"
#include "symmax/errors.hpp"
#include "symmax/linalg.hpp"
#include "test_support.hpp"

using namespace symmax;
using namespace symmax::testing;

namespace {

// Characteristic polynomial coefficients by Faddeev-LeVerrier:
// det(xI - M) = x^n + c[n-1] x^(n-1) + ... + c[0].
std::vector<Complex> characteristic_polynomial(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  std::vector<Complex> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1.0;
  ComplexMatrix mk = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * ComplexMatrix::Identity(n, n);
    c[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

double evaluate(const std::vector<Complex>& c, double x) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc.real();
}

}  // namespace

TEST_CASE("hs_inner examples") {
  const HermitianOperator i2 = HermitianOperator::identity(2);
  const HermitianOperator sx(sigma_x());
  const HermitianOperator sy(sigma_y());
  const HermitianOperator sz(sigma_z());
  CHECK(hs_inner(i2, i2) == doctest::Approx(2.0));
  CHECK(std::abs(hs_inner(sx, sy)) < 1e-15);
  CHECK(hs_inner(sz, sz) == doctest::Approx(2.0));
  CHECK_THROWS_AS(hs_inner(i2, HermitianOperator::identity(3)), DimensionError);
}

TEST_CASE("hs_inner is symmetric") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_hermitian(rng, 4);
    const auto b = random_hermitian(rng, 4);
    CHECK(std::abs(hs_inner(a, b) - hs_inner(b, a)) < 1e-12);
    CHECK(std::abs(hs_inner(a, b) - (a.matrix() * b.matrix()).trace().real()) < 1e-12);
  }
}

TEST_CASE("commutator examples") {
  const Complex i(0.0, 1.0);
  CHECK(max_abs(commutator(i * sigma_z(), sigma_x()) + 2.0 * sigma_y()) < 1e-15);

  const OperatorBasis gm = gell_mann_basis(3);
  const ComplexMatrix jz = named_matrix("J_z", 3);
  const ComplexMatrix& l4 = gm.elements[4].matrix();
  const ComplexMatrix& l5 = gm.elements[5].matrix();
  CHECK(max_abs(commutator(i * jz, l4) + 2.0 * l5) < 1e-15);

  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_complex(rng, 5, 5);
  CHECK(max_abs(commutator(a, a)) < 1e-14);
  CHECK_THROWS_AS(commutator(a, sigma_x()), DimensionError);
}

TEST_CASE("commutator is antisymmetric and bilinear") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_complex(rng, 3, 3);
    const ComplexMatrix b = random_complex(rng, 3, 3);
    const ComplexMatrix c = random_complex(rng, 3, 3);
    const double alpha = 0.7 * t - 3.0;
    const double beta = 1.3 - 0.2 * t;
    CHECK(max_abs(commutator(a, b) + commutator(b, a)) < 1e-12);
    CHECK(max_abs(commutator(alpha * a + beta * b, c) - alpha * commutator(a, c) -
                  beta * commutator(b, c)) < 1e-12);
  }
}

TEST_CASE("HermitianOperator rejects non-Hermitian input") {
  ComplexMatrix m = sigma_x();
  m(0, 1) = 2.0;
  CHECK_THROWS_AS(HermitianOperator{m}, DomainError);
  CHECK_THROWS_AS(HermitianOperator{ComplexMatrix(2, 3)}, DimensionError);
  ComplexMatrix nan = sigma_z();
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(HermitianOperator{nan}, DomainError);
}

TEST_CASE("eig_hermitian examples") {
  const Eigendecomposition z = eig_hermitian(HermitianOperator(sigma_z()));
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0));

  for (double gx : {-1.5, 0.3, 2.0}) {
    for (double gy : {-0.4, 0.0, 1.1}) {
      const HermitianOperator h(gx * sigma_x() + gy * sigma_y());
      const double g = std::hypot(gx, gy);
      const RealVector d = eigvals_hermitian(h);
      CHECK(std::abs(d(0) + g) < 1e-13);
      CHECK(std::abs(d(1) - g) < 1e-13);
    }
  }
}

TEST_CASE("eig_hermitian matches characteristic polynomial roots") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const HermitianOperator h = random_hermitian(rng, 4);
    const auto coeffs = characteristic_polynomial(h.matrix());
    const double bound = h.matrix().norm() + 1.0;
    std::vector<double> roots;
    const int grid = 20000;
    double prev_x = -bound;
    double prev_v = evaluate(coeffs, prev_x);
    for (int k = 1; k <= grid; ++k) {
      const double x = -bound + 2.0 * bound * k / grid;
      const double v = evaluate(coeffs, x);
      if ((prev_v < 0.0) != (v < 0.0)) {
        roots.push_back(oracle::scalar_root([&](double y) { return evaluate(coeffs, y); }, prev_x, x));
      }
      prev_x = x;
      prev_v = v;
    }
    REQUIRE(roots.size() == 4);
    const RealVector d = eigvals_hermitian(h);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(d(j) - roots[static_cast<std::size_t>(j)]) < 1e-9);
  }
}

TEST_CASE("eig_hermitian reconstruction and unitarity on random instances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 7);
    const HermitianOperator h = random_hermitian(rng, dim, 1.0 + trial % 3);
    const Eigendecomposition e = eig_hermitian(h);
    const auto n = static_cast<Eigen::Index>(dim);
    const ComplexMatrix& u = e.eigenvectors;
    CHECK(max_abs(u * u.adjoint() - ComplexMatrix::Identity(n, n)) <= 1e-10);
    const ComplexMatrix rebuilt = u * e.eigenvalues.cast<Complex>().asDiagonal() * u.adjoint();
    CHECK(max_abs(h.matrix() - rebuilt) <= 1e-10 * (1.0 + max_abs(h.matrix())));
    for (Eigen::Index j = 1; j < n; ++j) CHECK(e.eigenvalues(j - 1) <= e.eigenvalues(j));
  }
}

TEST_CASE("eigenvector phase convention is deterministic") {
  std::mt19937_64 rng(99);
  const HermitianOperator h = random_hermitian(rng, 5);
  const Eigendecomposition a = eig_hermitian(h);
  const Eigendecomposition b = eig_hermitian(h);
  CHECK(max_abs(a.eigenvectors - b.eigenvectors) == 0.0);
  for (Eigen::Index c = 0; c < 5; ++c) {
    Eigen::Index pivot = 0;
    a.eigenvectors.col(c).cwiseAbs().maxCoeff(&pivot);
    CHECK(std::abs(a.eigenvectors(pivot, c).imag()) < 1e-15);
    CHECK(a.eigenvectors(pivot, c).real() > 0.0);
  }
}

TEST_CASE("degenerate and zero spectra") {
  const RealVector zero = eigvals_hermitian(HermitianOperator::zero(3));
  CHECK(zero.cwiseAbs().maxCoeff() == 0.0);
  const Eigendecomposition e = eig_hermitian(HermitianOperator(kron(sigma_z(), eye(2))));
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e.eigenvalues(1) == doctest::Approx(-1.0));
  CHECK(e.eigenvalues(3) == doctest::Approx(1.0));
}

TEST_CASE("expm_hermitian examples") {
  CHECK(max_abs(expm_hermitian(HermitianOperator::zero(4)).matrix() - eye(4)) < 1e-15);

  const double gx = 0.8;
  const double gy = -1.3;
  const double g = std::hypot(gx, gy);
  const ComplexMatrix m = gx * sigma_x() + gy * sigma_y();
  const ComplexMatrix closed = 0.5 * (std::exp(g) + std::exp(-g)) * eye(2) +
                               (std::exp(g) - std::exp(-g)) / (2.0 * g) * m;
  CHECK(max_abs(expm_hermitian(HermitianOperator(m)).matrix() - closed) < 1e-12);
}

TEST_CASE("expm_hermitian matches a Taylor-series oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    HermitianOperator h = random_hermitian(rng, 3);
    h = h * (0.99 / std::max(1.0, h.matrix().norm()));
    ComplexMatrix term = eye(3);
    ComplexMatrix sum = eye(3);
    for (int k = 1; k <= 30; ++k) {
      term = term * h.matrix() / static_cast<double>(k);
      sum += term;
    }
    CHECK(max_abs(expm_hermitian(h).matrix() - sum) < 1e-12);
  }
}

TEST_CASE("expm_hermitian properties") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
    const HermitianOperator h = random_hermitian(rng, dim);
    const HermitianOperator e = expm_hermitian(h);
    const HermitianOperator e_neg = expm_hermitian(-h);
    const auto n = static_cast<Eigen::Index>(dim);
    CHECK(eigvals_hermitian(e)(0) > 0.0);
    CHECK(max_abs(e.matrix() * e_neg.matrix() - ComplexMatrix::Identity(n, n)) <= 1e-9);
    const double trace_sum = eigvals_hermitian(h).array().exp().sum();
    CHECK(std::abs(e.matrix().trace().real() - trace_sum) <= 1e-10 * trace_sum);
  }
}

TEST_CASE("expm_hermitian refuses to overflow") {
  CHECK_THROWS_AS(expm_hermitian(HermitianOperator::identity(2) * 701.0), OverflowError);
  CHECK_NOTHROW(expm_hermitian(HermitianOperator::identity(2) * 699.0));
}

TEST_CASE("kron examples") {
  CHECK(max_abs(kron(eye(2), eye(2)) - eye(4)) == 0.0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(max_abs(kron(sigma_z(), eye(2)) - expected) == 0.0);
  const ComplexMatrix xx = kron(sigma_x(), sigma_x());
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0, 0.0));
  CHECK(kron(eye(2), eye(3)).rows() == 6);
}
