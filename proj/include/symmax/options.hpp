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

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace symmax {

enum class SolverStatus { Converged, Boundary, Infeasible, MaxIterations };

std::string_view to_string(SolverStatus status);

struct SolverOptions {
  /// Stop when the dual gradient's max-norm drops to this.
  double tol = 1e-10;
  std::size_t max_iterations = 10000;
  /// ‖θ‖_∞ above this ends the solve with Boundary (or Infeasible).
  double multiplier_cap = 1e3;
  /// Δ-minimization: seed and number of random restarts beyond the θ = 0 start.
  std::uint64_t seed = 0;
  std::size_t restarts = 8;
  double delta_tol = 1e-16;
};

}  // namespace symmax
