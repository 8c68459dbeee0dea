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

#include "equus/value.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "support/generators.h"
#include "support/naive_eval.h"
#include "support/printers.h"

namespace equus {
namespace {

TEST(ErrorKindTest, CodesAreExact) {
  const std::vector<std::string> expected = {"#DIV/0!", "#N/A",  "#NAME?",   "#NULL!",
                                             "#NUM!",   "#REF!", "#VALUE!", "#SPILL!"};
  ASSERT_EQ(std::size(kAllErrorKinds), 8u);
  for (size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(ErrorCode(kAllErrorKinds[i]), expected[i]);
    EXPECT_EQ(ErrorFromCode(expected[i]), kAllErrorKinds[i]);
  }
  EXPECT_EQ(ErrorFromCode("#div/0!"), std::nullopt);
}

TEST(ValueTest, NumbersAreFinite) {
  EXPECT_EQ(Value::Number(std::numeric_limits<double>::infinity()), Value::Error(ErrorKind::kNum));
  EXPECT_EQ(Value::Number(-std::numeric_limits<double>::infinity()),
            Value::Error(ErrorKind::kNum));
  EXPECT_EQ(Value::Number(std::nan("")), Value::Error(ErrorKind::kNum));
  EXPECT_FALSE(std::signbit(Value::Number(-0.0).number()));
}

TEST(ValueTest, TypeMatchesContent) {
  EXPECT_TRUE(Value().IsEmpty());
  EXPECT_TRUE(Value::Number(1).IsNumber());
  EXPECT_TRUE(Value::Boolean(true).IsBoolean());
  EXPECT_TRUE(Value::Text("").IsText());
  EXPECT_TRUE(Value::Error(ErrorKind::kNA).IsError());
  EXPECT_NE(Value::Text(""), Value());
  EXPECT_NE(Value::Number(0), Value());
}

TEST(RenderNumberTest, Examples) {
  EXPECT_EQ(RenderNumber(14), "14");
  EXPECT_EQ(RenderNumber(0), "0");
  EXPECT_EQ(RenderNumber(-3.5), "-3.5");
  EXPECT_EQ(RenderNumber(0.1 + 0.2), "0.3");
  EXPECT_EQ(RenderNumber(1.0 / 3), "0.333333333333333");
  EXPECT_EQ(RenderNumber(40.0 / 3), "13.3333333333333");
  EXPECT_EQ(RenderNumber(1e20), "1E+20");
  EXPECT_EQ(RenderNumber(1e-7), "1E-07");
  EXPECT_EQ(RenderNumber(0.00001), "0.00001");
  EXPECT_EQ(RenderNumber(123456789012345.0), "123456789012345");
  EXPECT_EQ(RenderNumber(1e15), "1E+15");
  EXPECT_EQ(RenderNumber(1.5e300), "1.5E+300");
  EXPECT_EQ(RenderNumber(-2.5e-10), "-2.5E-10");
  EXPECT_EQ(RenderNumber(100), "100");
  EXPECT_EQ(RenderNumber(std::sin(40.0 / 3)), "0.693951534577056");
}

TEST(RenderValueTest, AllTypes) {
  EXPECT_EQ(RenderValue(Value()), "");
  EXPECT_EQ(RenderValue(Value::Boolean(true)), "TRUE");
  EXPECT_EQ(RenderValue(Value::Boolean(false)), "FALSE");
  EXPECT_EQ(RenderValue(Value::Text("x y")), "x y");
  EXPECT_EQ(RenderValue(Value::Error(ErrorKind::kDiv0)), "#DIV/0!");
}

// Rendering agrees with an independently written formatter on random
// doubles drawn from raw bit patterns and from decimal-looking values.
TEST(RenderNumberPropertyTest, MatchesReferenceFormatter) {
  test::Rng rng(99);
  std::uniform_int_distribution<uint64_t> bits;
  for (int i = 0; i < 20000; ++i) {
    double x = std::bit_cast<double>(bits(rng));
    if (!std::isfinite(x)) continue;
    ASSERT_EQ(RenderNumber(x), test::NaiveNumberText(x)) << x;
  }
  for (int i = 0; i < 20000; ++i) {
    const double x = test::Uniform(rng, -1000000, 1000000) / std::pow(10.0, test::Uniform(rng, 0, 12));
    ASSERT_EQ(RenderNumber(x), test::NaiveNumberText(x)) << x;
  }
}

TEST(ParseNumericTextTest, Accepts) {
  EXPECT_EQ(ParseNumericText("12"), 12);
  EXPECT_EQ(ParseNumericText(" 7 "), 7);
  EXPECT_EQ(ParseNumericText("-1.5e2"), -150);
  EXPECT_EQ(ParseNumericText("+.5"), 0.5);
  EXPECT_EQ(ParseNumericText("5."), 5);
}

TEST(ParseNumericTextTest, Rejects) {
  for (const char* bad : {"", " ", "abc", "1e", "1e+", "--1", "1 2", ".", "1e999", "0x10",
                          "1,000", "TRUE"}) {
    EXPECT_EQ(ParseNumericText(bad), std::nullopt) << bad;
  }
}

TEST(CoercionTest, ToNumber) {
  EXPECT_EQ(CoerceToNumber(Value()), Value::Number(0));
  EXPECT_EQ(CoerceToNumber(Value::Boolean(true)), Value::Number(1));
  EXPECT_EQ(CoerceToNumber(Value::Text(" 3 ")), Value::Number(3));
  EXPECT_EQ(CoerceToNumber(Value::Text("abc")), Value::Error(ErrorKind::kValue));
  EXPECT_EQ(CoerceToNumber(Value::Error(ErrorKind::kRef)), Value::Error(ErrorKind::kRef));
}

TEST(CoercionTest, ToBoolean) {
  EXPECT_EQ(CoerceToBoolean(Value()), Value::Boolean(false));
  EXPECT_EQ(CoerceToBoolean(Value::Number(-2)), Value::Boolean(true));
  EXPECT_EQ(CoerceToBoolean(Value::Number(0)), Value::Boolean(false));
  EXPECT_EQ(CoerceToBoolean(Value::Text("true")), Value::Boolean(true));
  EXPECT_EQ(CoerceToBoolean(Value::Text("1")), Value::Error(ErrorKind::kValue));
}

TEST(CoercionTest, ToText) {
  EXPECT_EQ(CoerceToText(Value()), Value::Text(""));
  EXPECT_EQ(CoerceToText(Value::Number(0.5)), Value::Text("0.5"));
  EXPECT_EQ(CoerceToText(Value::Boolean(false)), Value::Text("FALSE"));
  EXPECT_EQ(CoerceToText(Value::Error(ErrorKind::kNA)), Value::Error(ErrorKind::kNA));
}

}  // namespace
}  // namespace equus
