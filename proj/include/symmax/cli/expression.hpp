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
#include <memory>
#include <optional>
#include <string>

#include "symmax/linalg.hpp"

namespace symmax::cli {

/// Operator expressions used in problem files:
///
///   expr    := term (('+' | '-') term)*
///   term    := ['-'] factor ('*' factor)*
///   factor  := number | name ['(' dim ')'] | 'kron' '(' expr ',' expr ')' | '(' expr ')'
///
/// Names are the basis presets (identity, sigma_x, J_z, swap, ...). A bare
/// number stands for that multiple of the identity; a product of two
/// operators is the matrix product. Inside kron, factor dimensions come from
/// fixed-size presets or explicit name(dim) and the other factor takes the
/// remaining dimension.
class Expression {
 public:
  struct Node;

  /// Throws ParseError with a column position.
  static Expression parse(const std::string& text);

  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  ~Expression();

  const std::string& text() const { return text_; }

  /// The dimension implied by the expression alone, if any.
  std::optional<std::size_t> natural_dim() const;

  /// Evaluates at total dimension `dim`. Throws DimensionError, DomainError
  /// or LookupError.
  ComplexMatrix evaluate(std::size_t dim) const;

 private:
  Expression(std::string text, std::unique_ptr<Node> root);

  std::string text_;
  std::unique_ptr<Node> root_;
};

}  // namespace symmax::cli
