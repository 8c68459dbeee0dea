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

#include "equus/expr.h"

#include <charconv>
#include <utility>

namespace equus {

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kPower: return precedence::kPower;
    case BinaryOp::kMultiply:
    case BinaryOp::kDivide: return precedence::kMultiplicative;
    case BinaryOp::kAdd:
    case BinaryOp::kSubtract: return precedence::kAdditive;
    case BinaryOp::kConcat: return precedence::kConcat;
    default: return precedence::kComparison;
  }
}

int Precedence(UnaryOp op) {
  return op == UnaryOp::kPercent ? precedence::kPercent : precedence::kPrefix;
}

std::string_view Symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSubtract: return "-";
    case BinaryOp::kMultiply: return "*";
    case BinaryOp::kDivide: return "/";
    case BinaryOp::kPower: return "^";
    case BinaryOp::kConcat: return "&";
    case BinaryOp::kEq: return "=";
    case BinaryOp::kNeq: return "<>";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGe: return ">=";
  }
  return "?";
}

std::string_view Symbol(UnaryOp op) {
  switch (op) {
    case UnaryOp::kNegate: return "-";
    case UnaryOp::kPlus: return "+";
    case UnaryOp::kPercent: return "%";
  }
  return "?";
}

std::string_view Name(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "add";
    case BinaryOp::kSubtract: return "subtract";
    case BinaryOp::kMultiply: return "multiply";
    case BinaryOp::kDivide: return "divide";
    case BinaryOp::kPower: return "power";
    case BinaryOp::kConcat: return "concat";
    case BinaryOp::kEq: return "eq";
    case BinaryOp::kNeq: return "neq";
    case BinaryOp::kLt: return "lt";
    case BinaryOp::kGt: return "gt";
    case BinaryOp::kLe: return "le";
    case BinaryOp::kGe: return "ge";
  }
  return "?";
}

std::string_view Name(UnaryOp op) {
  switch (op) {
    case UnaryOp::kNegate: return "negate";
    case UnaryOp::kPlus: return "plus";
    case UnaryOp::kPercent: return "percent";
  }
  return "?";
}

Expr Expr::Number(double value, std::string written) {
  return Expr{NumberLit{value, std::move(written)}, {}};
}

// value must be finite and non-negative; negative numbers are written with a
// unary minus.
Expr Expr::Number(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return Number(value, std::string(buf, end));
}

Expr Expr::Text(std::string value) { return Expr{TextLit{std::move(value)}, {}}; }
Expr Expr::Bool(bool value) { return Expr{BoolLit{value}, {}}; }
Expr Expr::Cell(CellAddress a) { return Expr{CellRef{a}, {}}; }

Expr Expr::Range(CellAddress a, CellAddress b) {
  CellAddress start = a;
  CellAddress end = b;
  if (a.column > b.column) {
    start.column = b.column;
    start.column_absolute = b.column_absolute;
    end.column = a.column;
    end.column_absolute = a.column_absolute;
  }
  if (a.row > b.row) {
    start.row = b.row;
    start.row_absolute = b.row_absolute;
    end.row = a.row;
    end.row_absolute = a.row_absolute;
  }
  return Expr{RangeRef{start, end}, {}};
}

Expr Expr::MakeUnary(UnaryOp op, Expr operand) {
  Expr e{Unary{op}, {}};
  e.children.push_back(std::move(operand));
  return e;
}

Expr Expr::MakeBinary(BinaryOp op, Expr left, Expr right) {
  Expr e{Binary{op}, {}};
  e.children.reserve(2);
  e.children.push_back(std::move(left));
  e.children.push_back(std::move(right));
  return e;
}

Expr Expr::MakeCall(std::string name, std::vector<Expr> args) {
  return Expr{Call{std::move(name)}, std::move(args)};
}

int NodePrecedence(const Expr& e) {
  if (const auto* u = e.As<Unary>()) return Precedence(u->op);
  if (const auto* b = e.As<Binary>()) return Precedence(b->op);
  return precedence::kPrimary;
}

size_t CountNodes(const Expr& e) {
  size_t n = 1;
  for (const Expr& c : e.children) n += CountNodes(c);
  return n;
}

}  // namespace equus
