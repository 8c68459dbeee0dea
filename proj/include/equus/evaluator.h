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

#ifndef EQUUS_EVALUATOR_H
#define EQUUS_EVALUATOR_H

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "equus/address.h"
#include "equus/expr.h"
#include "equus/functions.h"
#include "equus/value.h"

namespace equus {

// Ranges larger than this evaluate to #REF!.
inline constexpr long long kMaxRangeCells = 1LL << 20;

struct EvalContext {
  // Total: unset cells resolve to Empty. Called with `$`-free addresses.
  std::function<Value(const CellAddress&)> resolve;
  const FunctionRegistry* registry = &BuiltinRegistry();
};

// An EvalContext whose every cell is Empty.
[[nodiscard]] EvalContext EmptyContext();

struct AnnotatedNode {
  const Expr* expr = nullptr;  // points into the owning AnnotatedTree
  Value value;
  // This node holds an Error that none of the children it draws its result
  // from carries.
  bool error_origin = false;
  // False inside the branch an IF did not take (and inside both branches
  // when the condition itself is an error).
  bool on_result_path = true;
  // Shared by every reference to the same cell (or the same range).
  std::optional<int> ref_group;
  // Range references only: the covered cells, row-major.
  std::vector<Value> range_values;
  std::vector<AnnotatedNode> children;
};

// An Expr mirrored with the value of every subexpression. Copies share the
// underlying Expr, so node expr pointers stay valid.
class AnnotatedTree {
 public:
  AnnotatedTree(std::shared_ptr<const Expr> expr, AnnotatedNode root)
      : expr_(std::move(expr)), root_(std::move(root)) {}

  [[nodiscard]] const Expr& expr() const { return *expr_; }
  [[nodiscard]] const AnnotatedNode& root() const { return root_; }
  [[nodiscard]] const Value& value() const { return root_.value; }
  // The formula's result as a cell would hold it (a bare reference to a
  // blank cell yields 0).
  [[nodiscard]] Value Result() const;
  [[nodiscard]] size_t size() const;

 private:
  std::shared_ptr<const Expr> expr_;
  AnnotatedNode root_;
};

// Evaluates post-order, left to right. Both IF branches are evaluated and
// annotated; only the taken one feeds the result. Never throws on formula
// content: failures are Error values in the tree.
[[nodiscard]] AnnotatedTree Evaluate(const Expr& e, const EvalContext& ctx);
[[nodiscard]] AnnotatedTree Evaluate(std::shared_ptr<const Expr> e, const EvalContext& ctx);

// Number of cells a range covers.
[[nodiscard]] long long RangeCellCount(const RangeRef& r);

}  // namespace equus

#endif  // EQUUS_EVALUATOR_H
