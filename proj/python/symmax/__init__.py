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

"""Maximum-entropy inference under symmetry constraints."""

from ._core import (
    ClassicalSolution,
    DimensionError,
    DomainError,
    Error,
    InfeasibleError,
    LookupError,
    NumericalError,
    OverflowError,
    ParseError,
    QuantumSolution,
    SolverOptions,
    SolverStatus,
    __version__,
    basis,
    entropy,
    expm_hermitian,
    gibbs_state,
    invariance_residual,
    named_operator,
    solve_classical,
    solve_problem,
    solve_quantum,
)

__all__ = [
    "ClassicalSolution",
    "DimensionError",
    "DomainError",
    "Error",
    "InfeasibleError",
    "LookupError",
    "NumericalError",
    "OverflowError",
    "ParseError",
    "QuantumSolution",
    "SolverOptions",
    "SolverStatus",
    "__version__",
    "basis",
    "entropy",
    "expm_hermitian",
    "gibbs_state",
    "invariance_residual",
    "named_operator",
    "solve_classical",
    "solve_problem",
    "solve_quantum",
]
