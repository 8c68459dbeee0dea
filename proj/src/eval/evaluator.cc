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

#include "equus/evaluator.h"

#include <map>
#include <tuple>

#include "equus/operators.h"

namespace equus {

EvalContext EmptyContext() {
  return EvalContext{[](const CellAddress&) { return Value(); }, &BuiltinRegistry()};
}

long long RangeCellCount(const RangeRef& r) {
  return static_cast<long long>(r.end.column - r.start.column + 1) *
         static_cast<long long>(r.end.row - r.start.row + 1);
}

Value AnnotatedTree::Result() const {
  return root_.value.IsEmpty() ? Value::Number(0) : root_.value;
}

namespace {

size_t CountAnnotated(const AnnotatedNode& n) {
  size_t total = 1;
  for (const auto& c : n.children) total += CountAnnotated(c);
  return total;
}

class Evaluator {
 public:
  explicit Evaluator(const EvalContext& ctx) : ctx_(ctx) {}

  // `aggregate_arg`: the node is an argument of a range-accepting function,
  // so a range is legal here.
  AnnotatedNode Eval(const Expr& e, bool on_path, bool aggregate_arg) {
    AnnotatedNode node;
    node.expr = &e;
    node.on_result_path = on_path;

    if (const auto* n = e.As<NumberLit>()) {
      node.value = Value::Number(n->value);
    } else if (const auto* t = e.As<TextLit>()) {
      node.value = Value::Text(t->value);
    } else if (const auto* b = e.As<BoolLit>()) {
      node.value = Value::Boolean(b->value);
    } else if (const auto* c = e.As<CellRef>()) {
      node.value = ctx_.resolve(c->address.Relative());
      node.ref_group = GroupFor(RefKey{false, c->address.column, c->address.row,
                                       c->address.column, c->address.row});
    } else if (const auto* r = e.As<RangeRef>()) {
      EvalRange(*r, aggregate_arg, node);
    } else if (const auto* u = e.As<Unary>()) {
      node.children.push_back(Eval(e.children[0], on_path, false));
      node.value = ApplyUnary(u->op, node.children[0].value);
    } else if (const auto* bin = e.As<Binary>()) {
      node.children.push_back(Eval(e.children[0], on_path, false));
      node.children.push_back(Eval(e.children[1], on_path, false));
      node.value = ApplyBinary(bin->op, node.children[0].value, node.children[1].value);
    } else if (const auto* call = e.As<Call>()) {
      EvalCall(e, *call, on_path, node);
      return node;
    }
    MarkOrigin(node, {});
    return node;
  }

 private:
  using RefKey = std::tuple<bool, int, int, int, int>;

  int GroupFor(const RefKey& key) {
    auto [it, inserted] = groups_.try_emplace(key, static_cast<int>(groups_.size()));
    return it->second;
  }

  void EvalRange(const RangeRef& r, bool aggregate_arg, AnnotatedNode& node) {
    node.ref_group =
        GroupFor(RefKey{true, r.start.column, r.start.row, r.end.column, r.end.row});
    if (RangeCellCount(r) > kMaxRangeCells) {
      node.value = Value::Error(ErrorKind::kRef);
      return;
    }
    node.range_values.reserve(static_cast<size_t>(RangeCellCount(r)));
    for (int row = r.start.row; row <= r.end.row; ++row) {
      for (int col = r.start.column; col <= r.end.column; ++col) {
        node.range_values.push_back(ctx_.resolve(CellAddress{col, row}));
      }
    }
    if (!aggregate_arg) {
      node.value = Value::Error(ErrorKind::kValue);
      return;
    }
    node.value = Argument::Range(node.range_values).value;
  }

  void EvalCall(const Expr& e, const Call& call, bool on_path, AnnotatedNode& node) {
    const FunctionSpec* spec = ctx_.registry->Find(call.name);
    const bool ranges = spec != nullptr && spec->accepts_ranges;
    const bool selective = spec != nullptr && spec->strictness == Strictness::kSelective;

    // IF: evaluate the condition first to learn which branch is live.
    std::vector<bool> live(e.children.size(), true);
    for (size_t i = 0; i < e.children.size(); ++i) {
      if (selective && i == 1 && e.children.size() == 3) {
        Value cond = CoerceToBoolean(node.children[0].value);
        live[1] = !cond.IsError() && cond.boolean();
        live[2] = !cond.IsError() && !cond.boolean();
      }
      node.children.push_back(Eval(e.children[i], on_path && live[i], ranges));
    }

    if (spec == nullptr) {
      node.value = Value::Error(ErrorKind::kName);
    } else if (!spec->arity.Accepts(e.children.size())) {
      node.value = Value::Error(ErrorKind::kValue);
    } else {
      std::vector<Argument> args;
      args.reserve(node.children.size());
      for (size_t i = 0; i < node.children.size(); ++i) {
        const AnnotatedNode& child = node.children[i];
        if (child.expr->Is<RangeRef>() && ranges) {
          args.push_back(Argument{child.value, child.range_values, true});
        } else if (child.expr->Is<CellRef>()) {
          args.push_back(Argument::Reference(child.value));
        } else {
          args.push_back(Argument::Scalar(child.value));
        }
      }
      node.value = CallFunction(*spec, args);
    }
    MarkOrigin(node, live);
  }

  // Origin unless a contributing child already carries the same error.
  static void MarkOrigin(AnnotatedNode& node, const std::vector<bool>& live) {
    if (!node.value.IsError()) return;
    for (size_t i = 0; i < node.children.size(); ++i) {
      if (!live.empty() && !live[i]) continue;
      if (node.children[i].value == node.value) return;
    }
    node.error_origin = true;
  }

  const EvalContext& ctx_;
  std::map<RefKey, int> groups_;
};

}  // namespace

size_t AnnotatedTree::size() const { return CountAnnotated(root_); }

AnnotatedTree Evaluate(std::shared_ptr<const Expr> e, const EvalContext& ctx) {
  Evaluator ev(ctx);
  AnnotatedNode root = ev.Eval(*e, true, false);
  return AnnotatedTree(std::move(e), std::move(root));
}

AnnotatedTree Evaluate(const Expr& e, const EvalContext& ctx) {
  return Evaluate(std::make_shared<const Expr>(e), ctx);
}

}  // namespace equus
