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

#include "doctest.h"
#include "oracle/oracle.hpp"
#include "symmax/errors.hpp"
#include "test_support.hpp"

using namespace symmax;
using namespace symmax::testing;

namespace {

ClassicalProblem dice(double a) {
  ClassicalProblem p;
  p.outcomes = 6;
  p.observables = {{1, 2, 3, 4, 5, 6}};
  p.targets = {a};
  p.symmetry = {Permutation::from_cycles({{2, 3}}, 6), Permutation::from_cycles({{2, 3, 4, 5}}, 6)};
  return p;
}

}  // namespace

TEST_CASE("scalar_root examples") {
  const double x = oracle::scalar_root([](double y) { return y * y - y - 3.0; }, 1.0, 3.0);
  CHECK(std::abs(x - (1.0 + std::sqrt(13.0)) / 2.0) <= 1e-14);
  CHECK(std::abs(oracle::scalar_root([](double y) { return y; }, -1.0, 1.0)) <= 1e-14);
  CHECK_THROWS_AS(oracle::scalar_root([](double y) { return y * y + 1.0; }, -1.0, 1.0), DomainError);

  const auto dice_equation = [](double l) {
    const double z = std::exp(l) + 4.0 * std::exp(3.5 * l) + std::exp(6.0 * l);
    return (std::exp(l) + 14.0 * std::exp(3.5 * l) + 6.0 * std::exp(6.0 * l)) / z - 4.5;
  };
  CHECK(std::abs(dice_equation(oracle::scalar_root(dice_equation, 0.0, 2.0))) <= 1e-12);
}

TEST_CASE("primal_classical examples") {
  const oracle::OracleResult fair = oracle::primal_classical(dice(3.5));
  for (double p : fair.probabilities) CHECK(std::abs(p - 1.0 / 6.0) <= 1e-9);
  CHECK(fair.max_violation <= 1e-9);

  ClassicalProblem coin;
  coin.outcomes = 2;
  coin.observables = {{0.0, 1.0}};
  coin.targets = {0.3};
  const oracle::OracleResult c = oracle::primal_classical(coin);
  CHECK(std::abs(c.probabilities[0] - 0.7) <= 1e-9);
  CHECK(std::abs(c.probabilities[1] - 0.3) <= 1e-9);

  const oracle::OracleResult loaded = oracle::primal_classical(dice(4.5));
  const ClassicalSolution s = solve_classical(dice(4.5));
  for (std::size_t j = 0; j < 6; ++j) CHECK(std::abs(loaded.probabilities[j] - s.probabilities[j]) <= 1e-6);
  CHECK(std::abs(loaded.entropy - s.entropy) <= 1e-6);
}

TEST_CASE("primal_classical rejects infeasible targets") {
  ClassicalProblem p = dice(7.0);
  CHECK_THROWS_AS(oracle::primal_classical(p), InfeasibleError);
}

TEST_CASE("primal_quantum examples") {
  QuantumProblem qubit;
  qubit.dim = 2;
  qubit.symmetry = LieSymmetry{{HermitianOperator(sigma_z())}};
  const oracle::OracleResult centre = oracle::primal_quantum(qubit);
  CHECK(max_abs(centre.density - eye(2) / 2.0) <= 1e-7);

  QuantumProblem qutrit;
  qutrit.dim = 3;
  qutrit.observables = {named_operator("J_z", 3)};
  qutrit.targets = {0.5};
  qutrit.symmetry = LieSymmetry{{named_operator("J_z", 3)}};
  const oracle::OracleResult q = oracle::primal_quantum(qutrit);
  CHECK(std::abs(q.density(0, 0).real() - 0.6162) <= 1e-4);
  CHECK(std::abs(q.density(1, 1).real() - 0.2676) <= 1e-4);
  CHECK(std::abs(q.density(2, 2).real() - 0.1162) <= 1e-4);
  CHECK(q.max_violation <= 1e-7);

  QuantumProblem pair;
  pair.dim = 4;
  pair.observables = {HermitianOperator(kron(sigma_x(), eye(2)) + kron(eye(2), sigma_x()))};
  pair.targets = {0.0};
  pair.symmetry = LieSymmetry{{HermitianOperator(kron(named_matrix("J_z", 2), eye(2)))}};
  CHECK(max_abs(oracle::primal_quantum(pair).density - eye(4) / 4.0) <= 1e-7);
}

TEST_CASE("primal_quantum rejects infeasible targets") {
  QuantumProblem p;
  p.dim = 2;
  p.observables = {HermitianOperator(sigma_x())};
  p.targets = {0.5};
  p.symmetry = LieSymmetry{{HermitianOperator(sigma_z())}};
  CHECK_THROWS_AS(oracle::primal_quantum(p), InfeasibleError);
}

TEST_CASE("oracle and dual solver agree on converged problems") {
  std::vector<QuantumProblem> problems;
  for (double a : {-0.6, 0.1, 0.9}) {
    QuantumProblem p;
    p.dim = 3;
    p.observables = {named_operator("J_z", 3)};
    p.targets = {a};
    p.symmetry = LieSymmetry{{named_operator("J_z", 3)}};
    problems.push_back(p);
  }
  for (double a : {-0.5, 0.5}) {
    QuantumProblem p;
    p.dim = 4;
    p.observables = {HermitianOperator(kron(sigma_x(), eye(2)) + kron(eye(2), sigma_x()))};
    p.targets = {a};
    p.symmetry = LieSymmetry{{HermitianOperator(kron(named_matrix("J_z", 2), eye(2)))}};
    p.basis = two_qubit_paper_basis();
    problems.push_back(p);
  }
  for (const auto& p : problems) {
    const SolverReport r = solve_dual(p);
    REQUIRE(r.status == SolverStatus::Converged);
    const oracle::OracleResult o = oracle::primal_quantum(p);
    CHECK(std::abs(o.entropy - r.entropy) <= 1e-6);
    CHECK(max_abs(o.density - r.state.matrix()) <= 1e-4);
  }
}

TEST_CASE("commutant_by_matrix_units dimensions") {
  CHECK(oracle::commutant_by_matrix_units({sigma_z()}, 2).size() == 2);
  CHECK(oracle::commutant_by_matrix_units({named_matrix("J_z", 3)}, 3).size() == 3);
  CHECK(oracle::commutant_by_matrix_units({named_matrix("J_x", 3), named_matrix("J_y", 3)}, 3).size() == 1);
  CHECK(oracle::commutant_by_matrix_units({kron(sigma_z(), eye(2))}, 4).size() == 8);
}
