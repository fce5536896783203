# Copyright 2026 The symmax Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math
import os
from pathlib import Path

import numpy as np
import pytest

import symmax

FIXTURES = Path(os.environ.get("SYMMAX_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))

SZ = np.diag([1.0, -1.0]).astype(complex)


def test_version():
    assert symmax.__version__.count(".") == 2


def test_qubit_without_observables_is_maximally_mixed():
    sol = symmax.solve_quantum(2, [], [], lie=[SZ])
    assert sol.status == symmax.SolverStatus.CONVERGED
    np.testing.assert_allclose(sol.state, np.eye(2) / 2, atol=1e-9)
    assert sol.entropy == pytest.approx(math.log(2), abs=1e-9)


@pytest.mark.parametrize("a", [-0.9, 0.0, 0.5])
def test_qubit_with_sigma_z_mean(a):
    sol = symmax.solve_quantum(2, [SZ], [a], lie=[SZ])
    np.testing.assert_allclose(sol.state, (np.eye(2) + a * SZ) / 2, atol=1e-8)


def test_qutrit_dual_and_delta_agree():
    jz = symmax.named_operator("J_z", 3)
    x = (1 + math.sqrt(13)) / 2
    z = x + 1 + 1 / x
    for method in ("dual", "delta"):
        sol = symmax.solve_quantum(3, [jz], [0.5], lie=[jz], method=method)
        np.testing.assert_allclose(np.diag(sol.state).real, [x / z, 1 / z, 1 / (x * z)], atol=1e-9)


def test_loaded_dice_has_equal_middle_faces():
    sol = symmax.solve_classical(6, [[1, 2, 3, 4, 5, 6]], [4.5], permutations=[[[2, 3]], [[2, 3, 4, 5]]])
    p = sol.probabilities
    assert p[1] == p[2] == p[3] == p[4]
    assert sum(p) == pytest.approx(1.0, abs=1e-12)
    assert sol.orbits == [[0], [1, 2, 3, 4], [5]]


def test_gibbs_entropy_and_expm():
    rho, log_z = symmax.gibbs_state([SZ], [0.3])
    assert log_z == pytest.approx(math.log(2 * math.cosh(0.3)), abs=1e-12)
    w = np.array([math.exp(0.3), math.exp(-0.3)]) / (2 * math.cosh(0.3))
    assert symmax.entropy(rho) == pytest.approx(-(w * np.log(w)).sum(), abs=1e-12)
    np.testing.assert_allclose(symmax.expm_hermitian(0.3 * SZ), np.diag(np.exp([0.3, -0.3])), atol=1e-12)


def test_invariance_residual():
    sx = symmax.named_operator("sigma_x", 2)
    assert symmax.invariance_residual(np.eye(2) / 2, lie=[SZ]) == pytest.approx(0.0, abs=1e-14)
    assert symmax.invariance_residual((np.eye(2) + 0.5 * sx) / 2, lie=[SZ]) > 1e-3


def test_basis_listing():
    elements = symmax.basis("gell_mann", 3)
    assert len(elements) == 9
    assert elements[0][1].shape == (3, 3)


def test_solve_problem_matches_fixture_solution():
    text = (FIXTURES / "qubit_sigma_z.json").read_text()
    report = json.loads(symmax.solve_problem(text))
    assert report["status"] == "converged"
    assert report["input"]["sha256"] == json.loads(symmax.solve_problem(text))["input"]["sha256"]


def test_errors_are_python_exceptions():
    with pytest.raises(symmax.Error):
        symmax.solve_quantum(2, [np.array([[0, 1], [0, 0]], dtype=complex)], [0.0])
    with pytest.raises(symmax.ParseError):
        symmax.solve_problem("{")
