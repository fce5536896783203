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
#include "symmax/basis.hpp"
#include "symmax/errors.hpp"
#include "test_support.hpp"

using namespace symmax;
using namespace symmax::testing;

namespace {

ComplexMatrix m3(std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (const Complex& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

double min_singular_value(const RealMatrix& g) {
  return Eigen::JacobiSVD<RealMatrix>(g).singularValues().minCoeff();
}

}  // namespace

TEST_CASE("gell_mann_basis(2) is identity plus Pauli matrices") {
  const OperatorBasis b = gell_mann_basis(2);
  REQUIRE(b.size() == 4);
  CHECK(max_abs(b.elements[0].matrix() - eye(2)) == 0.0);
  CHECK(max_abs(b.elements[1].matrix() - sigma_x()) == 0.0);
  CHECK(max_abs(b.elements[2].matrix() - sigma_y()) == 0.0);
  CHECK(max_abs(b.elements[3].matrix() - sigma_z()) == 0.0);
  CHECK(b.labels == std::vector<std::string>{"I", "gm_1", "gm_2", "gm_3"});
}

TEST_CASE("gell_mann_basis(3) reproduces the standard lambda matrices") {
  const Complex i(0.0, 1.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const std::vector<ComplexMatrix> lambda = {
      m3({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),   m3({{0, -i, 0}, {i, 0, 0}, {0, 0, 0}}),
      m3({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}),  m3({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}),
      m3({{0, 0, -i}, {0, 0, 0}, {i, 0, 0}}),  m3({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}}),
      m3({{0, 0, 0}, {0, 0, -i}, {0, i, 0}}),  m3({{r3, 0, 0}, {0, r3, 0}, {0, 0, -2.0 * r3}}),
  };
  const OperatorBasis b = gell_mann_basis(3);
  REQUIRE(b.size() == 9);
  CHECK(max_abs(b.elements[0].matrix() - eye(3)) == 0.0);
  for (std::size_t k = 0; k < 8; ++k) {
    CAPTURE(k);
    CHECK(max_abs(b.elements[k + 1].matrix() - lambda[k]) < 1e-15);
  }
}

TEST_CASE("gell_mann_basis orthogonality and trace properties") {
  for (std::size_t m = 2; m <= 6; ++m) {
    const OperatorBasis b = gell_mann_basis(m);
    REQUIRE(b.size() == m * m);
    const RealMatrix g = b.gram();
    CHECK(g(0, 0) == doctest::Approx(static_cast<double>(m)));
    for (std::size_t j = 1; j < b.size(); ++j) {
      CHECK(std::abs(b.elements[j].matrix().trace()) < 1e-14);
      CHECK(g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) == doctest::Approx(2.0));
    }
    RealMatrix off = g;
    off.diagonal().setZero();
    CHECK(off.cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("gell_mann_basis(4) has a nonsingular Gram matrix") {
  const OperatorBasis b = gell_mann_basis(4);
  CHECK(b.size() == 16);
  CHECK(min_singular_value(b.gram()) > 1e-10);
}

TEST_CASE("gell_mann_basis rejects m < 2") {
  CHECK_THROWS_AS(gell_mann_basis(1), DomainError);
  CHECK_THROWS_AS(gell_mann_basis(0), DomainError);
}

TEST_CASE("two_qubit_paper_basis matches the reference O_1..O_16") {
  const OperatorBasis b = two_qubit_paper_basis();
  REQUIRE(b.size() == 16);
  ComplexMatrix o1 = ComplexMatrix::Zero(4, 4);
  o1(0, 0) = 1.0;
  CHECK(max_abs(b.elements[0].matrix() - o1) == 0.0);
  ComplexMatrix o5 = ComplexMatrix::Zero(4, 4);
  o5(0, 1) = o5(1, 0) = 1.0;
  CHECK(max_abs(b.elements[4].matrix() - o5) == 0.0);
  ComplexMatrix o6 = ComplexMatrix::Zero(4, 4);
  o6(0, 1) = Complex(0, 1);
  o6(1, 0) = Complex(0, -1);
  CHECK(max_abs(b.elements[5].matrix() - o6) == 0.0);
  ComplexMatrix o16 = ComplexMatrix::Zero(4, 4);
  o16(2, 3) = Complex(0, 1);
  o16(3, 2) = Complex(0, -1);
  CHECK(max_abs(b.elements[15].matrix() - o16) == 0.0);
  ComplexMatrix o11 = ComplexMatrix::Zero(4, 4);
  o11(1, 2) = o11(2, 1) = 1.0;
  CHECK(max_abs(b.elements[10].matrix() - o11) == 0.0);
  CHECK(b.labels.front() == "O_1");
  CHECK(b.labels.back() == "O_16");

  const RealMatrix g = b.gram();
  for (Eigen::Index j = 0; j < 16; ++j) {
    for (Eigen::Index k = 0; k < 16; ++k) {
      if (j == k) {
        CHECK(g(j, k) == doctest::Approx(j < 4 ? 1.0 : 2.0));
      } else {
        CHECK(g(j, k) == 0.0);
      }
    }
  }
}

TEST_CASE("basis expansion recovers arbitrary Hermitian operators") {
  std::mt19937_64 rng(31);
  for (std::size_t m = 2; m <= 5; ++m) {
    const OperatorBasis b = gell_mann_basis(m);
    for (int t = 0; t < 10; ++t) {
      const HermitianOperator h = random_hermitian(rng, m);
      CHECK(max_abs(b.combine(b.coefficients(h)).matrix() - h.matrix()) < 1e-10);
    }
  }
  const OperatorBasis p = two_qubit_paper_basis();
  for (int t = 0; t < 10; ++t) {
    const HermitianOperator h = random_hermitian(rng, 4);
    CHECK(max_abs(p.combine(p.coefficients(h)).matrix() - h.matrix()) < 1e-10);
  }
}

TEST_CASE("named_operator presets") {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z.diagonal() << 1.0, -1.0;
  CHECK(max_abs(named_operator("sigma_z", 2).matrix() - z) == 0.0);
  ComplexMatrix jz = ComplexMatrix::Zero(3, 3);
  jz.diagonal() << 1.0, 0.0, -1.0;
  CHECK(max_abs(named_operator("J_z", 3).matrix() - jz) == 0.0);
  CHECK(max_abs(named_operator("identity", 5).matrix() - eye(5)) == 0.0);
  CHECK(max_abs(named_operator("J_z", 2).matrix() - 0.5 * sigma_z()) == 0.0);
  CHECK(max_abs(named_operator("J_x", 2).matrix() - 0.5 * sigma_x()) < 1e-15);
  CHECK(max_abs(named_operator("J_y", 2).matrix() - 0.5 * sigma_y()) < 1e-15);

  // Spin-1 algebra: [J_x, J_y] = i J_z.
  const ComplexMatrix jx = named_matrix("J_x", 3);
  const ComplexMatrix jy = named_matrix("J_y", 3);
  CHECK(max_abs(jx * jy - jy * jx - Complex(0, 1) * jz) < 1e-14);
}

TEST_CASE("named_operator errors") {
  CHECK_THROWS_AS(named_operator("sigma_w", 2), LookupError);
  CHECK_THROWS_AS(named_operator("sigma_x", 3), DomainError);
  CHECK_THROWS_AS(named_operator("J_z", 1), DomainError);
  CHECK_THROWS_AS(named_matrix("swap", 3), DomainError);
  const ComplexMatrix swap = named_matrix("swap", 4);
  CHECK(is_unitary(swap));
  CHECK(swap(1, 2) == Complex(1.0, 0.0));
  CHECK(swap(0, 0) == Complex(1.0, 0.0));
}
