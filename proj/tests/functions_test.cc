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

#include "equus/functions.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "equus/evaluator.h"
#include "equus/parser.h"
#include "support/printers.h"

namespace equus {
namespace {

Value N(double x) { return Value::Number(x); }
Value T(std::string s) { return Value::Text(std::move(s)); }
Value Bool(bool b) { return Value::Boolean(b); }
Value E(ErrorKind k) { return Value::Error(k); }

Value Call(std::string_view name, std::vector<Value> args) {
  const FunctionSpec* spec = BuiltinRegistry().Find(name);
  EXPECT_NE(spec, nullptr) << name;
  return CallFunction(*spec, std::span<const Value>(args));
}

Value CallArgs(std::string_view name, std::vector<Argument> args) {
  return CallFunction(*BuiltinRegistry().Find(name), std::span<const Argument>(args));
}

TEST(RegistryTest, ContainsRequiredFunctions) {
  for (const char* name : {"SUM", "AVERAGE", "MIN", "MAX", "COUNT", "IF", "AND", "OR", "NOT",
                           "TRUE", "FALSE", "SIN", "COS", "TAN", "SQRT", "ABS", "ROUND", "TRUNC",
                           "PI", "POWER", "MOD"}) {
    EXPECT_NE(BuiltinRegistry().Find(name), nullptr) << name;
  }
  EXPECT_EQ(BuiltinRegistry().Find("NOSUCHFN"), nullptr);
}

TEST(RegistryTest, IfIsSelectiveWithThreeArguments) {
  const FunctionSpec* spec = BuiltinRegistry().Find("IF");
  EXPECT_EQ(spec->strictness, Strictness::kSelective);
  EXPECT_EQ(spec->arity.min, 3u);
  EXPECT_EQ(spec->arity.max, 3u);
}

TEST(RegistryTest, TanIsStrictUnary) {
  const FunctionSpec* spec = BuiltinRegistry().Find("TAN");
  EXPECT_EQ(spec->strictness, Strictness::kStrict);
  EXPECT_EQ(spec->arity.min, 1u);
  EXPECT_EQ(spec->arity.max, 1u);
}

TEST(RegistryTest, AggregatesAreVariadicAndRangeAware) {
  for (const char* name : {"SUM", "AVERAGE", "MIN", "MAX", "COUNT"}) {
    const FunctionSpec* spec = BuiltinRegistry().Find(name);
    EXPECT_EQ(spec->arity.min, 1u) << name;
    EXPECT_FALSE(spec->arity.max) << name;
    EXPECT_TRUE(spec->accepts_ranges) << name;
    EXPECT_EQ(spec->strictness, Strictness::kStrict) << name;
  }
}

TEST(FunctionsTest, Math) {
  EXPECT_EQ(Call("SQRT", {N(-1)}), E(ErrorKind::kNum));
  EXPECT_EQ(Call("SQRT", {N(16)}), N(4));
  EXPECT_EQ(Call("ABS", {N(-2.5)}), N(2.5));
  EXPECT_EQ(Call("TAN", {E(ErrorKind::kDiv0)}), E(ErrorKind::kDiv0));
  EXPECT_EQ(Call("SIN", {N(0)}), N(0));
  EXPECT_EQ(Call("COS", {N(0)}), N(1));
  EXPECT_EQ(Call("PI", {}), N(std::numbers::pi));
  EXPECT_EQ(Call("POWER", {N(2), N(3)}), N(8));
  EXPECT_EQ(Call("POWER", {N(0), N(0)}), E(ErrorKind::kNum));
  EXPECT_EQ(Call("SIN", {T("x")}), E(ErrorKind::kValue));
}

TEST(FunctionsTest, Mod) {
  EXPECT_EQ(Call("MOD", {N(7), N(3)}), N(1));
  EXPECT_EQ(Call("MOD", {N(-7), N(3)}), N(2));
  EXPECT_EQ(Call("MOD", {N(7), N(-3)}), N(-2));
  EXPECT_EQ(Call("MOD", {N(1), N(0)}), E(ErrorKind::kDiv0));
}

TEST(FunctionsTest, RoundingIsDecimal) {
  EXPECT_EQ(Call("TRUNC", {N(3.789), N(1)}), N(3.7));
  EXPECT_EQ(Call("TRUNC", {N(-3.7)}), N(-3));
  EXPECT_EQ(Call("ROUND", {N(2.675), N(2)}), N(2.68));
  EXPECT_EQ(Call("ROUND", {N(-2.5), N(0)}), N(-3));
  EXPECT_EQ(Call("ROUND", {N(1234.5), N(-2)}), N(1200));
  EXPECT_EQ(Call("ROUND", {N(0.5), N(0)}), N(1));
  EXPECT_EQ(Call("ROUND", {N(0.04), N(1)}), N(0));
  EXPECT_EQ(Call("ROUND", {N(0.05), N(1)}), N(0.1));
  EXPECT_EQ(Call("ROUND", {N(9.995), N(2)}), N(10));
  EXPECT_EQ(Call("ROUND", {N(1.23), N(20)}), N(1.23));
  EXPECT_EQ(Call("ROUND", {N(1.23), N(1e9)}), N(1.23));
  EXPECT_EQ(Call("ROUND", {N(123), N(-1e9)}), N(0));
  EXPECT_EQ(Call("TRUNC", {N(1.5), N(0.9)}), N(1));
}

TEST(FunctionsTest, Aggregates) {
  EXPECT_EQ(Call("SUM", {N(1), N(2), T("3"), Bool(true)}), N(7));
  EXPECT_EQ(Call("SUM", {T("x")}), E(ErrorKind::kValue));
  EXPECT_EQ(Call("AVERAGE", {N(1), N(2)}), N(1.5));
  EXPECT_EQ(Call("MIN", {N(3), N(-1)}), N(-1));
  EXPECT_EQ(Call("MAX", {N(3), N(-1)}), N(3));
  EXPECT_EQ(Call("COUNT", {N(1), T("2"), T("x"), Bool(false), Value()}), N(3));
}

TEST(FunctionsTest, ReferencesSkipNonNumbers) {
  const std::vector<Value> cells = {N(1), T("5"), Bool(true), Value(), N(2)};
  EXPECT_EQ(CallArgs("SUM", {Argument::Range(cells)}), N(3));
  EXPECT_EQ(CallArgs("AVERAGE", {Argument::Range(cells)}), N(1.5));
  EXPECT_EQ(CallArgs("COUNT", {Argument::Range(cells)}), N(2));
  EXPECT_EQ(CallArgs("SUM", {Argument::Reference(T("5"))}), N(0));
  EXPECT_EQ(CallArgs("AVERAGE", {Argument::Range({T("a"), Value()})}), E(ErrorKind::kDiv0));
  EXPECT_EQ(CallArgs("MAX", {Argument::Range({T("a")})}), N(0));
  EXPECT_EQ(CallArgs("MIN", {Argument::Range({})}), N(0));
}

TEST(FunctionsTest, RangeCarriesFirstError) {
  Argument a = Argument::Range({N(1), E(ErrorKind::kNA), E(ErrorKind::kRef)});
  EXPECT_EQ(a.value, E(ErrorKind::kNA));
  EXPECT_EQ(CallArgs("SUM", {a}), E(ErrorKind::kNA));
  EXPECT_EQ(CallArgs("COUNT", {Argument::Scalar(N(1)), a}), E(ErrorKind::kNA));
  EXPECT_TRUE(Argument::Range({N(1)}).value.IsEmpty());
}

TEST(FunctionsTest, Logic) {
  EXPECT_EQ(Call("AND", {Bool(true), Call("OR", {Bool(false), Bool(true)})}), Bool(true));
  EXPECT_EQ(Call("AND", {Bool(true), N(0)}), Bool(false));
  EXPECT_EQ(Call("OR", {T("false"), N(0)}), Bool(false));
  EXPECT_EQ(Call("OR", {T("x")}), E(ErrorKind::kValue));
  EXPECT_EQ(CallArgs("AND", {Argument::Range({T("x"), Value()})}), E(ErrorKind::kValue));
  EXPECT_EQ(CallArgs("OR", {Argument::Range({T("x"), N(2)})}), Bool(true));
  EXPECT_EQ(Call("NOT", {Bool(false)}), Bool(true));
  EXPECT_EQ(Call("NOT", {N(2)}), Bool(false));
  EXPECT_EQ(Call("TRUE", {}), Bool(true));
  EXPECT_EQ(Call("FALSE", {}), Bool(false));
}

TEST(FunctionsTest, IfSelectsOneBranch) {
  EXPECT_EQ(Call("IF", {Bool(true), N(5), E(ErrorKind::kDiv0)}), N(5));
  EXPECT_EQ(Call("IF", {N(0), E(ErrorKind::kDiv0), T("no")}), T("no"));
  EXPECT_EQ(Call("IF", {Bool(true), Value(), N(1)}), N(0));
  EXPECT_EQ(Call("IF", {T("maybe"), N(1), N(2)}), E(ErrorKind::kValue));
  EXPECT_EQ(Call("IF", {E(ErrorKind::kNA), N(1), N(2)}), E(ErrorKind::kNA));
}

// Strict propagation over every registered strict function: for each valid
// argument count (variadics up to min+2), each position and each error kind,
// the result is that error; with a second error further right the leftmost
// still wins. Fillers include values that would make the kernel fail.
TEST(StrictPropagationTest, EveryStrictFunctionAndPosition) {
  const std::vector<Value> fillers = {N(1), N(-1), T("abc"), Bool(true), Value()};
  int checks = 0;
  for (const FunctionSpec* spec : BuiltinRegistry().All()) {
    if (spec->strictness != Strictness::kStrict) continue;
    const size_t hi = spec->arity.max ? *spec->arity.max : spec->arity.min + 2;
    for (size_t n = std::max<size_t>(spec->arity.min, 1); n <= hi; ++n) {
      for (size_t pos = 0; pos < n; ++pos) {
        for (ErrorKind k : kAllErrorKinds) {
          for (const Value& filler : fillers) {
            std::vector<Value> args(n, filler);
            args[pos] = E(k);
            ASSERT_EQ(CallFunction(*spec, std::span<const Value>(args)), E(k))
                << spec->name << " n=" << n << " pos=" << pos;
            if (pos + 1 < n) {
              args[n - 1] = E(k == ErrorKind::kNA ? ErrorKind::kRef : ErrorKind::kNA);
              ASSERT_EQ(CallFunction(*spec, std::span<const Value>(args)), E(k)) << spec->name;
            }
            ++checks;
          }
        }
      }
    }
  }
  EXPECT_GT(checks, 1000);
}

// The same through the evaluator, with the error arriving from a cell.
TEST(StrictPropagationTest, ThroughEvaluator) {
  for (ErrorKind k : kAllErrorKinds) {
    EvalContext ctx{[k](const CellAddress& a) {
                      return a.column == 1 && a.row == 1 ? E(k) : N(2);
                    },
                    &BuiltinRegistry()};
    for (const char* f : {"=SUM(B1,A1,C1)", "=SUM(B1:B3,A1:A2)", "=AVERAGE(A1)", "=MIN(2,A1)",
                          "=MAX(A1:C1)", "=COUNT(B1,A1)", "=AND(TRUE,A1)", "=OR(A1)",
                          "=NOT(A1)", "=SIN(A1)", "=COS(A1)", "=TAN(A1)", "=SQRT(A1)",
                          "=ABS(A1)", "=ROUND(1,A1)", "=TRUNC(A1)", "=POWER(A1,2)",
                          "=MOD(3,A1)", "=A1+1", "=1-A1", "=A1*2", "=2/A1", "=A1^2", "=A1&1",
                          "=A1=1", "=1<>A1", "=A1<1", "=A1>1", "=A1<=1", "=A1>=1", "=-A1",
                          "=+A1", "=A1%", "=IF(TRUE,A1,1)", "=IF(A1,1,2)"}) {
      EXPECT_EQ(Evaluate(Parse(f), ctx).value(), E(k)) << f;
    }
  }
}

}  // namespace
}  // namespace equus
