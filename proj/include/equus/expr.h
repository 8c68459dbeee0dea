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

#ifndef EQUUS_EXPR_H
#define EQUUS_EXPR_H

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "equus/address.h"

namespace equus {

enum class UnaryOp { kNegate, kPlus, kPercent };

enum class BinaryOp {
  kAdd,
  kSubtract,
  kMultiply,
  kDivide,
  kPower,
  kConcat,
  kEq,
  kNeq,
  kLt,
  kGt,
  kLe,
  kGe,
};

inline constexpr BinaryOp kAllBinaryOps[] = {
    BinaryOp::kAdd, BinaryOp::kSubtract, BinaryOp::kMultiply, BinaryOp::kDivide,
    BinaryOp::kPower, BinaryOp::kConcat, BinaryOp::kEq, BinaryOp::kNeq,
    BinaryOp::kLt, BinaryOp::kGt, BinaryOp::kLe, BinaryOp::kGe};

inline constexpr UnaryOp kAllUnaryOps[] = {UnaryOp::kNegate, UnaryOp::kPlus,
                                           UnaryOp::kPercent};

// Binding strength, higher binds tighter. Ranges only join two cell
// references and are handled as a primary.
namespace precedence {
inline constexpr int kComparison = 1;
inline constexpr int kConcat = 2;
inline constexpr int kAdditive = 3;
inline constexpr int kMultiplicative = 4;
inline constexpr int kPower = 5;
inline constexpr int kPercent = 6;
inline constexpr int kPrefix = 7;
inline constexpr int kPrimary = 8;
}  // namespace precedence

[[nodiscard]] int Precedence(BinaryOp op);
[[nodiscard]] int Precedence(UnaryOp op);
[[nodiscard]] std::string_view Symbol(BinaryOp op);
[[nodiscard]] std::string_view Symbol(UnaryOp op);
// Lower-case names used in AST dumps ("add", "negate", ...).
[[nodiscard]] std::string_view Name(BinaryOp op);
[[nodiscard]] std::string_view Name(UnaryOp op);

struct NumberLit {
  double value = 0;
  std::string written;  // lexeme as it appeared in the source
  bool operator==(const NumberLit&) const = default;
};
struct TextLit {
  std::string value;  // unescaped
  bool operator==(const TextLit&) const = default;
};
struct BoolLit {
  bool value = false;
  bool operator==(const BoolLit&) const = default;
};
struct CellRef {
  CellAddress address;
  bool operator==(const CellRef&) const = default;
};
// Normalized so start.column <= end.column and start.row <= end.row.
struct RangeRef {
  CellAddress start;
  CellAddress end;
  bool operator==(const RangeRef&) const = default;
};
struct Unary {
  UnaryOp op;
  bool operator==(const Unary&) const = default;
};
struct Binary {
  BinaryOp op;
  bool operator==(const Binary&) const = default;
};
struct Call {
  std::string name;  // upper case
  bool operator==(const Call&) const = default;
};

// Formula syntax tree. The payload says what the node is; operands and call
// arguments live in children (1 for Unary, 2 for Binary, n for Call, 0 for
// literals and references).
struct Expr {
  using Node = std::variant<NumberLit, TextLit, BoolLit, CellRef, RangeRef,
                            Unary, Binary, Call>;

  Node node;
  std::vector<Expr> children;

  bool operator==(const Expr&) const = default;

  template <typename T>
  [[nodiscard]] const T* As() const {
    return std::get_if<T>(&node);
  }
  template <typename T>
  [[nodiscard]] bool Is() const {
    return std::holds_alternative<T>(node);
  }
  [[nodiscard]] bool IsLeaf() const { return children.empty() && !Is<Call>(); }

  static Expr Number(double value, std::string written);
  static Expr Number(double value);
  static Expr Text(std::string value);
  static Expr Bool(bool value);
  static Expr Cell(CellAddress a);
  static Expr Range(CellAddress a, CellAddress b);  // normalizes
  static Expr MakeUnary(UnaryOp op, Expr operand);
  static Expr MakeBinary(BinaryOp op, Expr left, Expr right);
  static Expr MakeCall(std::string name, std::vector<Expr> args);
};

// Binding strength of the node as a whole, for deciding where an unparser
// must add parentheses.
[[nodiscard]] int NodePrecedence(const Expr& e);

[[nodiscard]] size_t CountNodes(const Expr& e);

}  // namespace equus

#endif  // EQUUS_EXPR_H
