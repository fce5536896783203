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

#include "symmax/cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "symmax/basis.hpp"
#include "symmax/errors.hpp"

namespace symmax::cli {

struct Expression::Node {
  enum class Kind { Number, Name, Kron, Sum, Difference, Product, Negate };
  Kind kind = Kind::Number;
  double value = 0.0;
  std::string name;
  std::size_t dim = 0;  // explicit name(dim); 0 when absent
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
};

namespace {

using Node = Expression::Node;
using Kind = Expression::Node::Kind;

std::unique_ptr<Node> make(Kind kind, std::unique_ptr<Node> left = nullptr, std::unique_ptr<Node> right = nullptr) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  std::unique_ptr<Node> parse() {
    auto root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("column " + std::to_string(pos_ + 1), message + " in expression '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::unique_ptr<Node> expr() {
    auto left = term();
    while (true) {
      if (accept('+')) {
        left = make(Kind::Sum, std::move(left), term());
      } else if (accept('-')) {
        left = make(Kind::Difference, std::move(left), term());
      } else {
        return left;
      }
    }
  }

  std::unique_ptr<Node> term() {
    if (accept('-')) return make(Kind::Negate, term());
    auto left = factor();
    while (accept('*')) left = make(Kind::Product, std::move(left), factor());
    return left;
  }

  std::unique_ptr<Node> factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string word = identifier();
      if (word == "kron") {
        expect('(');
        auto a = expr();
        expect(',');
        auto b = expr();
        expect(')');
        return make(Kind::Kron, std::move(a), std::move(b));
      }
      auto n = make(Kind::Name);
      n->name = word;
      if (accept('(')) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a dimension after '" + word + "('");
        n->dim = std::stoul(text_.substr(start, pos_ - start));
        if (n->dim == 0) fail("dimension must be positive");
        expect(')');
      }
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::unique_ptr<Node> number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || end == first) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - first);
    auto n = make(Kind::Number);
    n->value = v;
    return n;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> natural(const Node& n) {
  switch (n.kind) {
    case Kind::Number:
      return std::nullopt;
    case Kind::Name: {
      if (n.dim != 0) return n.dim;
      const std::size_t fixed = named_fixed_dim(n.name);
      return fixed == 0 ? std::nullopt : std::optional<std::size_t>(fixed);
    }
    case Kind::Kron: {
      const auto a = natural(*n.left);
      const auto b = natural(*n.right);
      if (a && b) return *a * *b;
      return std::nullopt;
    }
    case Kind::Negate:
      return natural(*n.left);
    case Kind::Sum:
    case Kind::Difference:
    case Kind::Product:
      if (auto a = natural(*n.left)) return a;
      return natural(*n.right);
  }
  return std::nullopt;
}

// Scalars stay scalars until they meet an operator, so "2 * sigma_z" and
// "sigma_z + 1" need no dimension bookkeeping.
struct Value {
  bool scalar = true;
  double s = 0.0;
  ComplexMatrix m;

  ComplexMatrix as_matrix(std::size_t dim) const {
    if (!scalar) return m;
    const auto n = static_cast<Eigen::Index>(dim);
    return s * ComplexMatrix::Identity(n, n);
  }
};

Value eval(const Node& n, std::size_t dim) {
  switch (n.kind) {
    case Kind::Number:
      return {true, n.value, {}};
    case Kind::Name: {
      if (n.dim != 0 && n.dim != dim) {
        throw DimensionError("'" + n.name + "(" + std::to_string(n.dim) + ")' used where dimension " +
                             std::to_string(dim) + " is required");
      }
      return {false, 0.0, named_matrix(n.name, dim)};
    }
    case Kind::Kron: {
      auto a = natural(*n.left);
      auto b = natural(*n.right);
      if (!a && !b) {
        throw DomainError("kron: cannot infer factor dimensions; give one factor an explicit size, e.g. identity(2)");
      }
      if (!a) {
        if (dim % *b != 0) throw DimensionError("kron: " + std::to_string(*b) + " does not divide " + std::to_string(dim));
        a = dim / *b;
      }
      if (!b) {
        if (dim % *a != 0) throw DimensionError("kron: " + std::to_string(*a) + " does not divide " + std::to_string(dim));
        b = dim / *a;
      }
      if (*a * *b != dim) {
        throw DimensionError("kron: factors of size " + std::to_string(*a) + " and " + std::to_string(*b) +
                             " do not make dimension " + std::to_string(dim));
      }
      return {false, 0.0, kron(eval(*n.left, *a).as_matrix(*a), eval(*n.right, *b).as_matrix(*b))};
    }
    case Kind::Negate: {
      Value v = eval(*n.left, dim);
      if (v.scalar) {
        v.s = -v.s;
      } else {
        v.m = -v.m;
      }
      return v;
    }
    case Kind::Sum:
    case Kind::Difference: {
      const Value a = eval(*n.left, dim);
      const Value b = eval(*n.right, dim);
      const double sign = n.kind == Kind::Sum ? 1.0 : -1.0;
      if (a.scalar && b.scalar) return {true, a.s + sign * b.s, {}};
      return {false, 0.0, a.as_matrix(dim) + sign * b.as_matrix(dim)};
    }
    case Kind::Product: {
      const Value a = eval(*n.left, dim);
      const Value b = eval(*n.right, dim);
      if (a.scalar && b.scalar) return {true, a.s * b.s, {}};
      if (a.scalar) return {false, 0.0, a.s * b.m};
      if (b.scalar) return {false, 0.0, b.s * a.m};
      return {false, 0.0, a.m * b.m};
    }
  }
  return {};
}

}  // namespace

Expression::Expression(std::string text, std::unique_ptr<Node> root)
    : text_(std::move(text)), root_(std::move(root)) {}
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::~Expression() = default;

Expression Expression::parse(const std::string& text) {
  Parser parser(text);
  auto root = parser.parse();
  return Expression(text, std::move(root));
}

std::optional<std::size_t> Expression::natural_dim() const { return natural(*root_); }

ComplexMatrix Expression::evaluate(std::size_t dim) const {
  if (dim == 0) throw DomainError("expression '" + text_ + "': dimension must be positive");
  return eval(*root_, dim).as_matrix(dim);
}

}  // namespace symmax::cli
