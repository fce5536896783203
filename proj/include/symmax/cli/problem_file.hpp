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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "symmax/classical.hpp"
#include "symmax/quantum.hpp"

namespace symmax::cli {

/// An operator as written in a problem file: a preset name, an expression,
/// or an inline matrix of [re, im] pairs.
struct OperatorSource {
  enum class Form { Name, Expr, Matrix };
  Form form = Form::Name;
  std::string text;
  ComplexMatrix matrix;

  friend bool operator==(const OperatorSource& a, const OperatorSource& b) {
    return a.form == b.form && a.text == b.text && a.matrix.rows() == b.matrix.rows() &&
           a.matrix.cols() == b.matrix.cols() && a.matrix == b.matrix;
  }
};

struct ObservableEntry {
  std::optional<OperatorSource> op;  // quantum problems
  std::vector<double> values;        // classical problems
  double target = 0.0;
  friend bool operator==(const ObservableEntry&, const ObservableEntry&) = default;
};

struct SymmetryEntry {
  enum class Type { Lie, FiniteGroup, Permutations };
  Type type = Type::Lie;
  std::vector<OperatorSource> operators;
  /// One list of 1-based cycles per permutation generator.
  std::vector<std::vector<std::vector<std::size_t>>> permutations;
  friend bool operator==(const SymmetryEntry&, const SymmetryEntry&) = default;
};

struct ProblemFile {
  enum class Kind { Classical, Quantum };
  Kind kind = Kind::Quantum;
  std::size_t size = 0;  // "dim" or "outcomes"
  std::string description;
  std::vector<ObservableEntry> observables;
  std::optional<SymmetryEntry> symmetry;
  std::string basis = "gell_mann";
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

using ResolvedProblem = std::variant<ClassicalProblem, QuantumProblem>;

/// Throws ParseError whose where() is a field path such as
/// "observables[1].target".
ProblemFile parse_problem(const nlohmann::json& j);

/// Parses JSON text first; syntax errors carry "line L, column C".
ProblemFile parse_problem_text(const std::string& text);

nlohmann::ordered_json to_json(const ProblemFile& p);

/// Evaluates names, expressions and matrices and checks every operator
/// invariant. Failures are reported as ParseError at the offending field.
ResolvedProblem resolve(const ProblemFile& p);

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);

/// Accepts rows of [re, im] pairs or of plain real numbers.
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace symmax::cli
