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

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "rwspace/expr.hpp"
#include "support/oracles.hpp"

namespace rwspace {
namespace {

using K = Expr::Kind;

struct CorpusEntry {
  const char* text;
  const char* var;
  double lo;
  double hi;
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = {
      {"cosh(s)", "s", -3, 3},
      {"sqrt(1+t^2)", "t", -5, 5},
      {"2*t^3 - t", "t", -2, 2},
      {"exp(s^2)", "s", -1.5, 1.5},
      {"log(2 + sin(x))", "x", -5, 5},
      {"tanh(x) / (1 + x^2)", "x", -4, 4},
      {"sinh(2*t + 1) / 2", "t", -0.4, 2},
      {"x^(-1.5) + cos(3*x)", "x", 0.5, 3},
      {"(1 + x)^0.5 - pi*x", "x", 0, 4},
      {"-e^2 * sqrt(t^2 + t + 2)", "t", -3, 3},
      {"2 + sin(s)/4", "s", -3.1, 3.1},
      {"1 + t^2/10", "t", -1, 1},
  };
  return c;
}

TEST(ParseExpr, SingleFunctionApplication) {
  const Expr e = parse_expr("cosh(s)", "s");
  EXPECT_EQ(e.kind(), K::kCosh);
  ASSERT_EQ(e.arity(), 1u);
  EXPECT_EQ(e.child(0).kind(), K::kVariable);
  EXPECT_EQ(e.child(0).variable_name(), "s");
}

TEST(ParseExpr, SqrtOfSum) {
  const Expr e = parse_expr("sqrt(1+t^2)", "t");
  ASSERT_EQ(e.kind(), K::kSqrt);
  const Expr& sum = e.child(0);
  ASSERT_EQ(sum.kind(), K::kAdd);
  EXPECT_EQ(sum.child(0).kind(), K::kConstant);
  EXPECT_EQ(sum.child(0).value(), 1.0);
  ASSERT_EQ(sum.child(1).kind(), K::kPow);
  EXPECT_EQ(sum.child(1).child(0).kind(), K::kVariable);
  EXPECT_EQ(sum.child(1).child(1).value(), 2.0);
}

TEST(ParseExpr, CubicEvaluatesByHand) { EXPECT_EQ(parse_expr("2*t^3 - t", "t").eval(2.0), 14.0); }

TEST(ParseExpr, Precedence) {
  EXPECT_EQ(parse_expr("-2^2", "x").eval(0), -4.0);
  EXPECT_EQ(parse_expr("2^3^2", "x").eval(0), 512.0);
  EXPECT_EQ(parse_expr("2*3+4*5", "x").eval(0), 26.0);
  EXPECT_EQ(parse_expr("8/4/2", "x").eval(0), 1.0);
  EXPECT_EQ(parse_expr("10-4-3", "x").eval(0), 3.0);
  EXPECT_EQ(parse_expr("2^-1", "x").eval(0), 0.5);
  EXPECT_EQ(parse_expr("--x", "x").eval(3), 3.0);
  EXPECT_DOUBLE_EQ(parse_expr("1.5e1 + 2E-1", "x").eval(0), 15.2);
  EXPECT_DOUBLE_EQ(parse_expr("pi", "x").eval(0), 3.14159265358979323846);
  EXPECT_DOUBLE_EQ(parse_expr("e", "x").eval(0), 2.71828182845904523536);
}

TEST(ParseExpr, ConstantFoldingOfLiteralSubtrees) {
  const Expr e = parse_expr("2*3 + x", "x");
  ASSERT_EQ(e.kind(), K::kAdd);
  EXPECT_EQ(e.child(0).kind(), K::kConstant);
  EXPECT_EQ(e.child(0).value(), 6.0);
  // x*1 is not simplified: folding only touches literal-only subtrees.
  EXPECT_EQ(parse_expr("x*1", "x").kind(), K::kMul);
}

TEST(ParseExpr, SyntaxErrorsCarryByteOffsets) {
  auto offset_of = [](const char* text) {
    try {
      parse_expr(text, "x");
    } catch (const ParseError& e) {
      EXPECT_EQ(e.reason(), ParseError::Reason::kSyntax) << text;
      return e.offset();
    }
    ADD_FAILURE() << "no error for " << text;
    return std::size_t{0};
  };
  EXPECT_EQ(offset_of("1+*2"), 2u);
  EXPECT_EQ(offset_of("(x+1"), 4u);
  EXPECT_EQ(offset_of("x)"), 1u);
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("sin(x) $"), 7u);
}

TEST(ParseExpr, UnknownIdentifier) {
  try {
    parse_expr("2*y + x", "x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.reason(), ParseError::Reason::kUnknownIdentifier);
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse_expr("foo(x)", "x"), ParseError);
}

TEST(ParseExpr, WrongArity) {
  for (const char* text : {"sin(x, x)", "cosh()", "sqrt x", "exp"}) {
    try {
      parse_expr(text, "x");
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.reason(), ParseError::Reason::kWrongArity) << text;
    }
  }
}

TEST(ParseExpr, NonConstantExponentRejected) {
  try {
    parse_expr("x^x", "x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.reason(), ParseError::Reason::kNonConstantExponent);
  }
  EXPECT_NO_THROW(parse_expr("x^(2*pi)", "x"));
}

TEST(ParseExpr, InvalidVariableNames) {
  EXPECT_THROW(parse_expr("1", ""), std::invalid_argument);
  EXPECT_THROW(parse_expr("1", "pi"), std::invalid_argument);
  EXPECT_THROW(parse_expr("1", "cos"), std::invalid_argument);
}

TEST(Eval, SpecExamples) {
  EXPECT_EQ(parse_expr("cosh(s)", "s").eval(0.0), 1.0);
  const Expr e = parse_expr("sqrt(1+t^2)", "t");
  EXPECT_EQ(e.eval(0.0), 1.0);
  EXPECT_NEAR(e.eval(1.0), oracle::kSqrt2, 1e-15);
}

TEST(Eval, DomainViolationsNameTheNode) {
  try {
    parse_expr("1 + log(x - 1)", "x").eval(0.5);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(e.node().find("log"), std::string::npos);
    EXPECT_EQ(e.argument(), -0.5);
  }
  EXPECT_THROW(parse_expr("sqrt(x)", "x").eval(-1), DomainError);
  EXPECT_THROW(parse_expr("1/x", "x").eval(0), DomainError);
  EXPECT_THROW(parse_expr("x^0.5", "x").eval(-2), DomainError);
}

TEST(Differentiate, SpecExamples) {
  const Expr e = parse_expr("sqrt(1+t^2)", "t");
  const Expr d = e.derivative();
  EXPECT_EQ(d.eval(0.0), 0.0);
  EXPECT_NEAR(d.eval(1.0), oracle::kInvSqrt2, 1e-15);
  const double fd = oracle::fd1([&](double x) { return e.eval(x); }, 1.0);
  EXPECT_NEAR(d.eval(1.0), fd, 1e-10);
  EXPECT_NEAR(d.derivative().eval(0.0), 1.0, 1e-15);
  const double fd2 = oracle::fd1([&](double x) { return d.eval(x); }, 0.0);
  EXPECT_NEAR(fd2, 1.0, 1e-10);
}

TEST(Differentiate, StaysInVocabulary) {
  for (const auto& c : corpus()) {
    const Expr e = parse_expr(c.text, c.var);
    const Expr d2 = e.derivative().derivative();
    // Printing and reparsing exercises every node kind of the derivative.
    EXPECT_NO_THROW(parse_expr(d2.str(), c.var)) << c.text;
  }
}

TEST(Differentiate, DerivativeOfConstantIsZero) {
  const Expr c = Expr::constant(3.5);
  EXPECT_EQ(c.derivative().kind(), K::kConstant);
  EXPECT_EQ(c.derivative().value(), 0.0);
}

// |eval(e', x) - FD4(e, x)| <= 1e-6 (1 + |FD4|) at 100 random points per
// corpus entry, for the first and second derivatives.
TEST(Properties, DerivativesMatchFiniteDifferences) {
  oracle::Rng rng(20261015);
  for (const auto& c : corpus()) {
    const Expr e = parse_expr(c.text, c.var);
    const Expr d1 = e.derivative();
    const Expr d2 = d1.derivative();
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(c.lo + 1e-3, c.hi - 1e-3);
      const double fd = oracle::fd1([&](double y) { return e.eval(y); }, x);
      EXPECT_LE(std::abs(d1.eval(x) - fd), 1e-6 * (1 + std::abs(fd))) << c.text << " at " << x;
      const double fdd = oracle::fd1([&](double y) { return d1.eval(y); }, x);
      EXPECT_LE(std::abs(d2.eval(x) - fdd), 1e-6 * (1 + std::abs(fdd))) << c.text << " at " << x;
    }
  }
}

TEST(Properties, PrintParseRoundTrip) {
  oracle::Rng rng(7);
  for (const auto& c : corpus()) {
    const Expr e = parse_expr(c.text, c.var);
    for (const Expr& f : {e, e.derivative(), e.derivative().derivative()}) {
      const Expr g = parse_expr(f.str(), c.var);
      for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(c.lo, c.hi);
        const double want = f.eval(x);
        EXPECT_LE(std::abs(g.eval(x) - want), 1e-12 * std::max(1.0, std::abs(want))) << f.str();
      }
    }
  }
}

TEST(Concurrency, SharedExpressionsEvaluateIdenticallyAcrossThreads) {
  const Expr e = parse_expr("sqrt(1+t^2) * cosh(t) - log(2 + sin(t))", "t").derivative();
  std::vector<double> xs;
  for (int i = 0; i < 2000; ++i) xs.push_back(-3.0 + 6.0 * i / 1999.0);
  std::vector<double> serial;
  for (double x : xs) serial.push_back(e.eval(x));
  std::vector<std::vector<double>> results(4);
  std::vector<std::thread> threads;
  for (auto& r : results) {
    threads.emplace_back([&e, &xs, &r] {
      for (double x : xs) r.push_back(e.eval(x));
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
}

}  // namespace
}  // namespace rwspace
