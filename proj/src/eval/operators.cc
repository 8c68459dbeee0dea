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

#include "equus/operators.h"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace equus {

namespace {

// Rank of a type in mixed comparisons.
int TypeRank(const Value& v) {
  switch (v.type()) {
    case Value::Type::kNumber: return 0;
    case Value::Type::kText: return 1;
    case Value::Type::kBoolean: return 2;
    default: return 3;
  }
}

int CompareText(const std::string& a, const std::string& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int ca = std::tolower(static_cast<unsigned char>(a[i]));
    int cb = std::tolower(static_cast<unsigned char>(b[i]));
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

// Blank adopts the type of the other operand: 0, "" or FALSE.
Value BlankLike(const Value& other) {
  switch (other.type()) {
    case Value::Type::kText: return Value::Text("");
    case Value::Type::kBoolean: return Value::Boolean(false);
    default: return Value::Number(0);
  }
}

int Compare(Value a, Value b) {
  if (a.IsEmpty()) a = BlankLike(b);
  if (b.IsEmpty()) b = BlankLike(a);
  const int ra = TypeRank(a);
  const int rb = TypeRank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.type()) {
    case Value::Type::kNumber:
      if (a.number() == b.number()) return 0;
      return a.number() < b.number() ? -1 : 1;
    case Value::Type::kText: return CompareText(a.text(), b.text());
    case Value::Type::kBoolean:
      if (a.boolean() == b.boolean()) return 0;
      return a.boolean() ? 1 : -1;
    default: return 0;
  }
}

}  // namespace

Value Power(double base, double exponent) {
  if (base == 0 && exponent == 0) return Value::Error(ErrorKind::kNum);
  if (base == 0 && exponent < 0) return Value::Error(ErrorKind::kDiv0);
  return Value::Number(std::pow(base, exponent));
}

Value ApplyBinary(BinaryOp op, const Value& left, const Value& right) {
  if (left.IsError()) return left;
  if (right.IsError()) return right;

  switch (op) {
    case BinaryOp::kConcat: {
      Value l = CoerceToText(left);
      Value r = CoerceToText(right);
      return Value::Text(l.text() + r.text());
    }
    case BinaryOp::kEq: return Value::Boolean(Compare(left, right) == 0);
    case BinaryOp::kNeq: return Value::Boolean(Compare(left, right) != 0);
    case BinaryOp::kLt: return Value::Boolean(Compare(left, right) < 0);
    case BinaryOp::kGt: return Value::Boolean(Compare(left, right) > 0);
    case BinaryOp::kLe: return Value::Boolean(Compare(left, right) <= 0);
    case BinaryOp::kGe: return Value::Boolean(Compare(left, right) >= 0);
    default: break;
  }

  Value l = CoerceToNumber(left);
  if (l.IsError()) return l;
  Value r = CoerceToNumber(right);
  if (r.IsError()) return r;
  const double a = l.number();
  const double b = r.number();
  switch (op) {
    case BinaryOp::kAdd: return Value::Number(a + b);
    case BinaryOp::kSubtract: return Value::Number(a - b);
    case BinaryOp::kMultiply: return Value::Number(a * b);
    case BinaryOp::kDivide:
      if (b == 0) return Value::Error(ErrorKind::kDiv0);
      return Value::Number(a / b);
    case BinaryOp::kPower: return Power(a, b);
    default: break;
  }
  return Value::Error(ErrorKind::kValue);
}

Value ApplyUnary(UnaryOp op, const Value& operand) {
  Value x = CoerceToNumber(operand);
  if (x.IsError()) return x;
  switch (op) {
    case UnaryOp::kNegate: return Value::Number(-x.number());
    case UnaryOp::kPlus: return x;
    case UnaryOp::kPercent: return Value::Number(x.number() / 100);
  }
  return Value::Error(ErrorKind::kValue);
}

}  // namespace equus
