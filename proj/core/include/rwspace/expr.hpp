// Copyright 2026 The rwspace Authors.
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

#ifndef RWSPACE_EXPR_HPP_
#define RWSPACE_EXPR_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rwspace {

// Closed-form scalar function of one real variable.
//
// Expressions are immutable trees of shared nodes, so copies are cheap and
// concurrent evaluation from several threads is safe. The node vocabulary is
// closed under differentiation: powers only take constant exponents.
class Expr {
 public:
  enum class Kind {
    kConstant,
    kVariable,
    kNeg,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
    kSqrt,
    kExp,
    kLog,
    kSinh,
    kCosh,
    kTanh,
    kSin,
    kCos,
  };

  // The zero constant.
  Expr();

  static Expr constant(double value);
  static Expr variable(std::string name);

  static Expr neg(Expr a);
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  // Throws std::invalid_argument if `exponent` is not literal-only.
  static Expr pow(Expr base, Expr exponent);
  static Expr apply(Kind function, Expr arg);

  Kind kind() const;
  // Literal value; only meaningful when kind() == kConstant.
  double value() const;
  // Number of children (0, 1 or 2).
  std::size_t arity() const;
  const Expr& child(std::size_t i) const;
  // Symbol of the variable node; empty if the tree has no variable.
  const std::string& variable_name() const;

  // Throws DomainError on log of non-positive values, square roots of
  // negative values, division by zero or an undefined power.
  double eval(double x) const;

  // Exact symbolic derivative with respect to the variable.
  Expr derivative() const;

  // Fully parenthesised text that parse_expr() accepts.
  std::string str() const;

  // Number of nodes in the tree.
  std::size_t size() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  // Builds a node, folding it to a literal when every child is a literal.
  static Expr make(Kind kind, std::size_t arity, Expr a, Expr b);

  std::shared_ptr<const Node> node_;
};

// Name used in the text grammar for a function node, e.g. "cosh".
std::string_view function_name(Expr::Kind kind);

class ParseError : public std::runtime_error {
 public:
  enum class Reason { kSyntax, kUnknownIdentifier, kWrongArity, kNonConstantExponent };

  ParseError(Reason reason, std::size_t offset, const std::string& message);

  Reason reason() const { return reason_; }
  // Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  Reason reason_;
  std::size_t offset_;
};

class DomainError : public std::domain_error {
 public:
  DomainError(std::string node, double argument, const std::string& message);

  // Printed form of the offending sub-expression.
  const std::string& node() const { return node_; }
  double argument() const { return argument_; }

 private:
  std::string node_;
  double argument_;
};

// Grammar: infix + - * / ^, parentheses, unary minus, function application
// name(arg), decimal literals with optional exponent, the constants pi and e,
// and the single variable `var_name`. Precedence is ^ > unary - > * / > + -
// and ^ is right-associative. The exponent of ^ must fold to a constant.
Expr parse_expr(std::string_view text, std::string_view var_name);

}  // namespace rwspace

#endif  // RWSPACE_EXPR_HPP_
