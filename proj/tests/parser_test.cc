/**
 * Copyright 2026 The Equus Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "equus/parser.h"

#include <gtest/gtest.h>

#include <map>
#include <string>

#include "equus/parse_error.h"
#include "support/printers.h"

namespace equus {
namespace {

Expr N(double v) { return Expr::Number(v); }
Expr B(BinaryOp op, Expr l, Expr r) { return Expr::MakeBinary(op, std::move(l), std::move(r)); }
Expr U(UnaryOp op, Expr e) { return Expr::MakeUnary(op, std::move(e)); }
Expr Ref(std::string_view a) { return Expr::Cell(*ParseAddress(a)); }

ParseError ErrorFor(std::string_view input) {
  try {
    (void)Parse(input);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed without error: " << input;
  return ParseError(0, "");
}

TEST(ParserTest, MultiplyBindsTighterThanAdd) {
  EXPECT_EQ(Parse("=2+3*4"), B(BinaryOp::kAdd, N(2), B(BinaryOp::kMultiply, N(3), N(4))));
  EXPECT_EQ(DumpAst(Parse("=2+3*4")),
            "Binary add\n  Number 2\n  Binary multiply\n    Number 3\n    Number 4\n");
}

TEST(ParserTest, LeftAssociativity) {
  EXPECT_EQ(Parse("=10-2-3"),
            B(BinaryOp::kSubtract, B(BinaryOp::kSubtract, N(10), N(2)), N(3)));
  EXPECT_EQ(Parse("=2^3^2"), B(BinaryOp::kPower, B(BinaryOp::kPower, N(2), N(3)), N(2)));
  EXPECT_EQ(Parse("=8/4/2"), B(BinaryOp::kDivide, B(BinaryOp::kDivide, N(8), N(4)), N(2)));
}

TEST(ParserTest, UnaryMinusBindsTighterThanPower) {
  EXPECT_EQ(Parse("=-2^2"), B(BinaryOp::kPower, U(UnaryOp::kNegate, N(2)), N(2)));
  EXPECT_EQ(Parse("=2^-2"), B(BinaryOp::kPower, N(2), U(UnaryOp::kNegate, N(2))));
  EXPECT_EQ(Parse("=--1"), U(UnaryOp::kNegate, U(UnaryOp::kNegate, N(1))));
}

TEST(ParserTest, PercentIsPostfixBelowPrefix) {
  EXPECT_EQ(Parse("=-5%"), U(UnaryOp::kPercent, U(UnaryOp::kNegate, N(5))));
  EXPECT_EQ(Parse("=2^50%"), B(BinaryOp::kPower, N(2), U(UnaryOp::kPercent, N(50))));
  EXPECT_EQ(Parse("=5%%"), U(UnaryOp::kPercent, U(UnaryOp::kPercent, N(5))));
}

TEST(ParserTest, ParenthesesOverride) {
  EXPECT_EQ(Parse("=(2+3)*4"), B(BinaryOp::kMultiply, B(BinaryOp::kAdd, N(2), N(3)), N(4)));
  EXPECT_EQ(Parse("=10-(2-3)"),
            B(BinaryOp::kSubtract, N(10), B(BinaryOp::kSubtract, N(2), N(3))));
}

TEST(ParserTest, ConcatAndComparisonLevels) {
  EXPECT_EQ(Parse("=1+2&3=4"),
            B(BinaryOp::kEq, B(BinaryOp::kConcat, B(BinaryOp::kAdd, N(1), N(2)), N(3)), N(4)));
}

TEST(ParserTest, LiteralsAndReferences) {
  EXPECT_EQ(Parse("=\"a\"\"b\""), Expr::Text("a\"b"));
  EXPECT_EQ(Parse("=true"), Expr::Bool(true));
  EXPECT_EQ(Parse("=a1"), Ref("A1"));
  EXPECT_EQ(Unparse(Parse("=a1")), "=A1");
  EXPECT_EQ(Parse("=$x$1"), Expr::Cell(CellAddress{24, 1, true, true}));
  const Expr n = Parse("=1.50");
  ASSERT_TRUE(n.Is<NumberLit>());
  EXPECT_EQ(n.As<NumberLit>()->value, 1.5);
  EXPECT_EQ(n.As<NumberLit>()->written, "1.50");
}

TEST(ParserTest, RangesAreNormalized) {
  Expr r = Parse("=SUM(B3:A1)");
  ASSERT_EQ(r.children.size(), 1u);
  const auto* range = r.children[0].As<RangeRef>();
  ASSERT_NE(range, nullptr);
  EXPECT_EQ(FormatAddress(range->start), "A1");
  EXPECT_EQ(FormatAddress(range->end), "B3");
  EXPECT_EQ(Unparse(r), "=SUM(A1:B3)");
}

TEST(ParserTest, Calls) {
  Expr e = Parse("=if(A1>0, sum(A1:A3), -1)");
  ASSERT_TRUE(e.Is<Call>());
  EXPECT_EQ(e.As<Call>()->name, "IF");
  EXPECT_EQ(e.children.size(), 3u);
  EXPECT_EQ(Parse("=PI()"), Expr::MakeCall("PI", {}));
  EXPECT_EQ(Parse("=TRUE()"), Expr::MakeCall("TRUE", {}));
  EXPECT_EQ(Parse("=TAN(1/0)+SIN(40/3)"),
            B(BinaryOp::kAdd, Expr::MakeCall("TAN", {B(BinaryOp::kDivide, N(1), N(0))}),
              Expr::MakeCall("SIN", {B(BinaryOp::kDivide, N(40), N(3))})));
}

TEST(ParserTest, CustomArityLookup) {
  ArityLookup only_f = [](std::string_view name) -> std::optional<Arity> {
    if (name == "F") return Arity{2, 2};
    return std::nullopt;
  };
  EXPECT_EQ(Parse("=f(1,2)", only_f), Expr::MakeCall("F", {N(1), N(2)}));
  EXPECT_THROW((void)Parse("=SUM(1)", only_f), ParseError);
  EXPECT_THROW((void)Parse("=F(1)", only_f), ParseError);
}

TEST(ParserErrorTest, Positions) {
  struct Case {
    const char* input;
    size_t position;
  };
  for (const Case& c : {Case{"=2+", 3}, Case{"=", 1}, Case{"", 0}, Case{"=(1", 3},
                        Case{"=1)", 2}, Case{"=1 2", 3}, Case{"=*1", 1}, Case{"=A1:", 4},
                        Case{"=A1:2", 4}, Case{"=SUM(1,", 7}, Case{"=SUM(1;2)", 6},
                        Case{"=foo+1", 1}, Case{"=NOSUCHFN(1)", 1}, Case{"=IF(1,2)", 1},
                        Case{"=SUM()", 1}, Case{"=PI(1)", 1}, Case{"=1+)", 3}}) {
    EXPECT_EQ(ErrorFor(c.input).position(), c.position) << c.input;
  }
}

TEST(ParserErrorTest, Messages) {
  EXPECT_EQ(ErrorFor("=").message(), "empty formula");
  EXPECT_EQ(ErrorFor("=NOSUCHFN(1)").message(), "unknown function 'NOSUCHFN'");
  EXPECT_EQ(ErrorFor("=IF(1,2)").message(), "IF takes 3 argument(s), got 2");
  EXPECT_EQ(ErrorFor("=TRUNC()").message(), "TRUNC takes 1 to 2 argument(s), got 0");
  EXPECT_EQ(ErrorFor("=SUM()").message(), "SUM takes at least 1 argument(s), got 0");
  EXPECT_EQ(ErrorFor("=1 2").message(), "unexpected number '2'");
  EXPECT_EQ(ErrorFor("=foo").message(), "unknown name 'foo'");
}

TEST(ParserErrorTest, RecordIsJson) {
  EXPECT_EQ(ErrorFor("=2+").ToRecord(),
            "{\"position\":3,\"message\":\"expected operand\",\"expected\":[\"number\","
            "\"text-literal\",\"boolean-literal\",\"cell-ref\",\"identifier\",\"left-paren\","
            "\"operator\"]}");
}

TEST(ParserErrorTest, NestingLimit) {
  std::string deep = "=" + std::string(300, '(') + "1" + std::string(300, ')');
  EXPECT_EQ(ErrorFor(deep).message(), "formula nested too deeply");
  std::string negations = "=" + std::string(300, '-') + "1";
  EXPECT_EQ(ErrorFor(negations).message(), "formula nested too deeply");
  std::string fine = "=" + std::string(100, '(') + "1" + std::string(100, ')');
  EXPECT_EQ(Parse(fine), N(1));
}

// Oracle: an explicit precedence table (higher binds tighter) and the rule
// that equal levels group to the left. Every ordered pair of binary
// operators is checked on "1 op1 2 op2 3".
TEST(ParserPropertyTest, PrecedenceOfEveryOperatorPair) {
  const std::map<std::string, std::pair<BinaryOp, int>> table = {
      {"^", {BinaryOp::kPower, 5}},   {"*", {BinaryOp::kMultiply, 4}},
      {"/", {BinaryOp::kDivide, 4}},  {"+", {BinaryOp::kAdd, 3}},
      {"-", {BinaryOp::kSubtract, 3}}, {"&", {BinaryOp::kConcat, 2}},
      {"=", {BinaryOp::kEq, 1}},      {"<>", {BinaryOp::kNeq, 1}},
      {"<", {BinaryOp::kLt, 1}},      {">", {BinaryOp::kGt, 1}},
      {"<=", {BinaryOp::kLe, 1}},     {">=", {BinaryOp::kGe, 1}},
  };
  int checked = 0;
  for (const auto& [s1, o1] : table) {
    for (const auto& [s2, o2] : table) {
      const std::string input = "=1" + s1 + "2" + s2 + "3";
      const Expr expected = o1.second >= o2.second
                                ? B(o2.first, B(o1.first, N(1), N(2)), N(3))
                                : B(o1.first, N(1), B(o2.first, N(2), N(3)));
      EXPECT_EQ(Parse(input), expected) << input;
      // Prefix minus and postfix percent bind tighter than either.
      const std::string decorated = "=-1" + s1 + "2%" + s2 + "3";
      const Expr m1 = U(UnaryOp::kNegate, N(1));
      const Expr p2 = U(UnaryOp::kPercent, N(2));
      const Expr expected_decorated = o1.second >= o2.second
                                          ? B(o2.first, B(o1.first, m1, p2), N(3))
                                          : B(o1.first, m1, B(o2.first, p2, N(3)));
      EXPECT_EQ(Parse(decorated), expected_decorated) << decorated;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 144);
}

}  // namespace
}  // namespace equus
