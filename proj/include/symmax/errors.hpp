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

#include <stdexcept>
#include <string>
#include <utility>

namespace symmax {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A matrix exponential would overflow double precision.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A named preset does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A constraint set admits no feasible state.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem file or operator expression. `where` names the field
/// path or "line:column" of the offending input.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& message)
      : Error(where.empty() ? message : where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace symmax
