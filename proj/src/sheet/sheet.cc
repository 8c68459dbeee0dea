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

#include "equus/sheet.h"

#include <algorithm>
#include <cctype>

#include "equus/parser.h"

namespace equus {

CellContent MakeContent(std::string_view raw) {
  CellContent c;
  c.raw = std::string(raw);
  if (!raw.empty() && raw[0] == '=') {
    c.kind = CellContent::Kind::kFormula;
    c.formula = std::make_shared<const Expr>(Parse(raw));
    return c;
  }
  if (auto x = ParseNumericText(raw)) {
    c.kind = CellContent::Kind::kNumber;
    c.literal = Value::Number(*x);
    return c;
  }
  std::string upper;
  for (char ch : raw) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "TRUE" || upper == "FALSE") {
    c.kind = CellContent::Kind::kBoolean;
    c.literal = Value::Boolean(upper == "TRUE");
    return c;
  }
  c.kind = CellContent::Kind::kText;
  c.literal = Value::Text(std::string(raw));
  return c;
}

void Sheet::Set(const CellAddress& a, std::string_view raw) {
  if (raw.empty()) {
    Clear(a);
    return;
  }
  CellContent content = MakeContent(raw);
  cells_.insert_or_assign(a.Relative(), std::move(content));
}

const CellContent* Sheet::Find(const CellAddress& a) const {
  auto it = cells_.find(a.Relative());
  return it == cells_.end() ? nullptr : &it->second;
}

Sheet SetCell(Sheet s, const CellAddress& a, std::string_view raw) {
  s.Set(a, raw);
  return s;
}

namespace {

void CollectRefs(const Expr& e, const Sheet& sheet, std::vector<CellAddress>& out) {
  if (const auto* c = e.As<CellRef>()) {
    const CellContent* content = sheet.Find(c->address);
    if (content != nullptr && content->IsFormula()) out.push_back(c->address.Relative());
  } else if (const auto* r = e.As<RangeRef>()) {
    for (const auto& [addr, content] : sheet.cells()) {
      if (content.IsFormula() && addr.column >= r->start.column &&
          addr.column <= r->end.column && addr.row >= r->start.row &&
          addr.row <= r->end.row) {
        out.push_back(addr);
      }
    }
  }
  for (const Expr& child : e.children) CollectRefs(child, sheet, out);
}

// Tarjan's strongly connected components over formula cells.
class CycleFinder {
 public:
  explicit CycleFinder(const Sheet& sheet) {
    for (const auto& [addr, content] : sheet.cells()) {
      if (!content.IsFormula()) continue;
      std::vector<CellAddress> deps;
      CollectRefs(*content.formula, sheet, deps);
      edges_[addr] = std::move(deps);
    }
  }

  std::set<CellAddress, CellOrder> Run() {
    for (const auto& [addr, deps] : edges_) {
      if (!index_.contains(addr)) Visit(addr);
    }
    return std::move(cyclic_);
  }

 private:
  void Visit(const CellAddress& v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_.insert(v);
    bool self_loop = false;
    for (const CellAddress& w : edges_[v]) {
      if (w == v) self_loop = true;
      if (!index_.contains(w)) {
        Visit(w);
        low_[v] = std::min(low_[v], low_[w]);
      } else if (on_stack_.contains(w)) {
        low_[v] = std::min(low_[v], index_[w]);
      }
    }
    if (low_[v] != index_[v]) return;
    std::vector<CellAddress> component;
    for (;;) {
      CellAddress w = stack_.back();
      stack_.pop_back();
      on_stack_.erase(w);
      component.push_back(w);
      if (w == v) break;
    }
    if (component.size() > 1 || self_loop) cyclic_.insert(component.begin(), component.end());
  }

  std::map<CellAddress, std::vector<CellAddress>, CellOrder> edges_;
  std::map<CellAddress, int, CellOrder> index_;
  std::map<CellAddress, int, CellOrder> low_;
  std::vector<CellAddress> stack_;
  std::set<CellAddress, CellOrder> on_stack_;
  std::set<CellAddress, CellOrder> cyclic_;
  int counter_ = 0;
};

}  // namespace

SheetResolver::SheetResolver(const Sheet& sheet)
    : sheet_(sheet), cyclic_(CycleFinder(sheet).Run()) {}

bool SheetResolver::OnCycle(const CellAddress& a) const {
  return cyclic_.contains(a.Relative());
}

Value SheetResolver::Resolve(const CellAddress& a) {
  const CellAddress key = a.Relative();
  const CellContent* content = sheet_.Find(key);
  if (content == nullptr) return Value();
  if (!content->IsFormula()) return content->literal;
  if (cyclic_.contains(key)) return Value::Error(ErrorKind::kRef);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Value v = Evaluate(content->formula, Context()).Result();
  memo_.emplace(key, v);
  return v;
}

EvalContext SheetResolver::Context() {
  return EvalContext{[this](const CellAddress& a) { return Resolve(a); },
                     &BuiltinRegistry()};
}

Value Resolve(const Sheet& s, const CellAddress& a) {
  SheetResolver resolver(s);
  return resolver.Resolve(a);
}

std::vector<std::pair<CellAddress, Value>> ExpandRange(const Sheet& s, const RangeRef& r) {
  SheetResolver resolver(s);
  std::vector<std::pair<CellAddress, Value>> out;
  for (int row = r.start.row; row <= r.end.row; ++row) {
    for (int col = r.start.column; col <= r.end.column; ++col) {
      CellAddress a{col, row};
      out.emplace_back(a, resolver.Resolve(a));
    }
  }
  return out;
}

std::optional<AnnotatedTree> EvaluateCell(const Sheet& s, const CellAddress& a) {
  const CellContent* content = s.Find(a);
  if (content == nullptr || !content->IsFormula()) return std::nullopt;
  SheetResolver resolver(s);
  return Evaluate(content->formula, resolver.Context());
}

}  // namespace equus
