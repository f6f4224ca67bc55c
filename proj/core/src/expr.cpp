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

#include "rwspace/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace rwspace {

struct Expr::Node {
  Kind kind = Kind::kConstant;
  double value = 0.0;
  std::string name;
  std::vector<Expr> children;
};

namespace {

constexpr std::array<std::pair<std::string_view, Expr::Kind>, 8> kFunctions = {{
    {"sqrt", Expr::Kind::kSqrt},
    {"exp", Expr::Kind::kExp},
    {"log", Expr::Kind::kLog},
    {"sinh", Expr::Kind::kSinh},
    {"cosh", Expr::Kind::kCosh},
    {"tanh", Expr::Kind::kTanh},
    {"sin", Expr::Kind::kSin},
    {"cos", Expr::Kind::kCos},
}};

std::optional<Expr::Kind> lookup_function(std::string_view name) {
  for (const auto& [fname, kind] : kFunctions) {
    if (fname == name) return kind;
  }
  return std::nullopt;
}

bool is_function(Expr::Kind kind) { return !function_name(kind).empty(); }

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Pure arithmetic of one node; `node` is only used for error reporting.
double apply_node(const Expr& node, double a, double b) {
  auto fail = [&](double arg, const char* what) -> double {
    throw DomainError(node.str(), arg, what);
  };
  switch (node.kind()) {
    case Expr::Kind::kNeg:
      return -a;
    case Expr::Kind::kAdd:
      return a + b;
    case Expr::Kind::kSub:
      return a - b;
    case Expr::Kind::kMul:
      return a * b;
    case Expr::Kind::kDiv:
      if (b == 0.0) return fail(b, "division by zero");
      return a / b;
    case Expr::Kind::kPow:
      if (a < 0.0 && std::trunc(b) != b) {
        return fail(a, "negative base with non-integer exponent");
      }
      if (a == 0.0 && b < 0.0) return fail(a, "zero base with negative exponent");
      return std::pow(a, b);
    case Expr::Kind::kSqrt:
      if (a < 0.0) return fail(a, "square root of a negative value");
      return std::sqrt(a);
    case Expr::Kind::kExp:
      return std::exp(a);
    case Expr::Kind::kLog:
      if (a <= 0.0) return fail(a, "logarithm of a non-positive value");
      return std::log(a);
    case Expr::Kind::kSinh:
      return std::sinh(a);
    case Expr::Kind::kCosh:
      return std::cosh(a);
    case Expr::Kind::kTanh:
      return std::tanh(a);
    case Expr::Kind::kSin:
      return std::sin(a);
    case Expr::Kind::kCos:
      return std::cos(a);
    case Expr::Kind::kConstant:
    case Expr::Kind::kVariable:
      break;
  }
  return 0.0;
}

}  // namespace

std::string_view function_name(Expr::Kind kind) {
  for (const auto& [name, k] : kFunctions) {
    if (k == kind) return name;
  }
  return {};
}

Expr::Expr() : Expr(constant(0.0)) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->value = value;
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kVariable;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::make(Kind kind, std::size_t arity, Expr a, Expr b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children.push_back(std::move(a));
  if (arity == 2) n->children.push_back(std::move(b));
  Expr e(std::move(n));

  bool literal = true;
  for (const Expr& c : e.node_->children) literal = literal && c.kind() == Kind::kConstant;
  if (literal) {
    // A literal subtree outside the domain stays unfolded so the error
    // surfaces at evaluation time with the offending node.
    try {
      return constant(e.eval(0.0));
    } catch (const DomainError&) {
    }
  }
  return e;
}

Expr Expr::neg(Expr a) { return make(Kind::kNeg, 1, std::move(a), {}); }
Expr Expr::add(Expr a, Expr b) { return make(Kind::kAdd, 2, std::move(a), std::move(b)); }
Expr Expr::sub(Expr a, Expr b) { return make(Kind::kSub, 2, std::move(a), std::move(b)); }
Expr Expr::mul(Expr a, Expr b) { return make(Kind::kMul, 2, std::move(a), std::move(b)); }
Expr Expr::div(Expr a, Expr b) { return make(Kind::kDiv, 2, std::move(a), std::move(b)); }

Expr Expr::pow(Expr base, Expr exponent) {
  if (exponent.kind() != Kind::kConstant) {
    throw std::invalid_argument("exponent must be a constant: " + exponent.str());
  }
  return make(Kind::kPow, 2, std::move(base), std::move(exponent));
}

Expr Expr::apply(Kind function, Expr arg) {
  if (!is_function(function)) {
    throw std::invalid_argument("not a unary function kind");
  }
  return make(function, 1, std::move(arg), {});
}

Expr::Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
std::size_t Expr::arity() const { return node_->children.size(); }
const Expr& Expr::child(std::size_t i) const { return node_->children.at(i); }

const std::string& Expr::variable_name() const {
  static const std::string kEmpty;
  if (node_->kind == Kind::kVariable) return node_->name;
  for (const Expr& c : node_->children) {
    const std::string& name = c.variable_name();
    if (!name.empty()) return name;
  }
  return kEmpty;
}

double Expr::eval(double x) const {
  switch (node_->kind) {
    case Kind::kConstant:
      return node_->value;
    case Kind::kVariable:
      return x;
    default:
      break;
  }
  const double a = node_->children[0].eval(x);
  const double b = node_->children.size() == 2 ? node_->children[1].eval(x) : 0.0;
  return apply_node(*this, a, b);
}

Expr Expr::derivative() const {
  const auto& c = node_->children;
  switch (node_->kind) {
    case Kind::kConstant:
      return constant(0.0);
    case Kind::kVariable:
      return constant(1.0);
    case Kind::kNeg:
      return neg(c[0].derivative());
    case Kind::kAdd:
      return add(c[0].derivative(), c[1].derivative());
    case Kind::kSub:
      return sub(c[0].derivative(), c[1].derivative());
    case Kind::kMul:
      return add(mul(c[0].derivative(), c[1]), mul(c[0], c[1].derivative()));
    case Kind::kDiv:
      return div(sub(mul(c[0].derivative(), c[1]), mul(c[0], c[1].derivative())),
                 mul(c[1], c[1]));
    case Kind::kPow: {
      const double p = c[1].value();
      return mul(mul(constant(p), pow(c[0], constant(p - 1.0))), c[0].derivative());
    }
    case Kind::kSqrt:
      return div(c[0].derivative(), mul(constant(2.0), *this));
    case Kind::kExp:
      return mul(*this, c[0].derivative());
    case Kind::kLog:
      return div(c[0].derivative(), c[0]);
    case Kind::kSinh:
      return mul(apply(Kind::kCosh, c[0]), c[0].derivative());
    case Kind::kCosh:
      return mul(apply(Kind::kSinh, c[0]), c[0].derivative());
    case Kind::kTanh:
      return div(c[0].derivative(), pow(apply(Kind::kCosh, c[0]), constant(2.0)));
    case Kind::kSin:
      return mul(apply(Kind::kCos, c[0]), c[0].derivative());
    case Kind::kCos:
      return neg(mul(apply(Kind::kSin, c[0]), c[0].derivative()));
  }
  return constant(0.0);
}

std::string Expr::str() const {
  const auto& c = node_->children;
  switch (node_->kind) {
    case Kind::kConstant: {
      std::string s = format_double(node_->value);
      return node_->value < 0.0 ? "(" + s + ")" : s;
    }
    case Kind::kVariable:
      return node_->name;
    case Kind::kNeg:
      return "(-" + c[0].str() + ")";
    case Kind::kAdd:
      return "(" + c[0].str() + " + " + c[1].str() + ")";
    case Kind::kSub:
      return "(" + c[0].str() + " - " + c[1].str() + ")";
    case Kind::kMul:
      return "(" + c[0].str() + " * " + c[1].str() + ")";
    case Kind::kDiv:
      return "(" + c[0].str() + " / " + c[1].str() + ")";
    case Kind::kPow:
      return "(" + c[0].str() + " ^ " + c[1].str() + ")";
    default:
      return std::string(function_name(node_->kind)) + "(" + c[0].str() + ")";
  }
}

std::size_t Expr::size() const {
  std::size_t n = 1;
  for (const Expr& c : node_->children) n += c.size();
  return n;
}

ParseError::ParseError(Reason reason, std::size_t offset, const std::string& message)
    : std::runtime_error(message + " at byte " + std::to_string(offset)),
      reason_(reason),
      offset_(offset) {}

DomainError::DomainError(std::string node, double argument, const std::string& message)
    : std::domain_error(message + " in " + node + " (argument " + format_double(argument) +
                        ")"),
      node_(std::move(node)),
      argument_(argument) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) {
      fail(ParseError::Reason::kSyntax, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(ParseError::Reason reason, const std::string& message) const {
    throw ParseError(reason, pos_, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) {
      fail(ParseError::Reason::kSyntax, std::string("expected '") + ch + "'");
    }
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::add(std::move(lhs), parse_product());
      } else if (accept('-')) {
        lhs = Expr::sub(std::move(lhs), parse_product());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::mul(std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = Expr::div(std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::neg(parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) {
      Expr exponent = parse_unary();
      if (exponent.kind() != Expr::Kind::kConstant) {
        throw ParseError(ParseError::Reason::kNonConstantExponent, at,
                         "exponent must be constant");
      }
      return Expr::pow(std::move(base), std::move(exponent));
    }
    return base;
  }

  Expr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail(ParseError::Reason::kSyntax, "unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Expr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return parse_identifier();
    fail(ParseError::Reason::kSyntax, "unexpected '" + std::string(1, ch) + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail(ParseError::Reason::kSyntax, "malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;  // no exponent digits: leave the e unread
    }
    double value = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail(ParseError::Reason::kSyntax, "malformed number");
    }
    return Expr::constant(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (auto fn = lookup_function(name)) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '(') {
        pos_ = start;
        fail(ParseError::Reason::kWrongArity,
             "function '" + std::string(name) + "' expects one argument");
      }
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        fail(ParseError::Reason::kWrongArity,
             "function '" + std::string(name) + "' expects one argument, got none");
      }
      Expr arg = parse_sum();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        fail(ParseError::Reason::kWrongArity,
             "function '" + std::string(name) + "' expects one argument");
      }
      expect(')');
      return Expr::apply(*fn, std::move(arg));
    }
    if (name == var_) return Expr::variable(std::string(name));
    if (name == "pi") return Expr::constant(std::numbers::pi);
    if (name == "e") return Expr::constant(std::numbers::e);
    pos_ = start;
    fail(ParseError::Reason::kUnknownIdentifier, "unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, std::string_view var_name) {
  if (var_name.empty() || var_name == "pi" || var_name == "e" ||
      lookup_function(var_name).has_value()) {
    throw std::invalid_argument("invalid variable name '" + std::string(var_name) + "'");
  }
  return Parser(text, var_name).parse();
}

}  // namespace rwspace
