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

#ifndef EQUUS_SHEET_H
#define EQUUS_SHEET_H

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equus/address.h"
#include "equus/evaluator.h"
#include "equus/expr.h"
#include "equus/value.h"

namespace equus {

struct CellContent {
  enum class Kind { kNumber, kText, kBoolean, kFormula };

  Kind kind = Kind::kText;
  std::string raw;                     // exactly as entered
  Value literal;                       // non-formula kinds
  std::shared_ptr<const Expr> formula;  // kFormula only

  [[nodiscard]] bool IsFormula() const { return kind == Kind::kFormula; }
};

// Classifies raw cell input: "=..." is a formula (throws ParseError),
// numeric text a number, TRUE/FALSE (any case) a boolean, anything else
// text. Empty raw is not a content; callers clear the cell instead.
[[nodiscard]] CellContent MakeContent(std::string_view raw);

// Sparse grid keyed by `$`-free addresses. Absent cells are blank.
class Sheet {
 public:
  using Map = std::map<CellAddress, CellContent, CellOrder>;

  // Stores raw at a; empty raw clears the cell. On ParseError the sheet is
  // left unchanged.
  void Set(const CellAddress& a, std::string_view raw);
  void Clear(const CellAddress& a) { cells_.erase(a.Relative()); }

  [[nodiscard]] const CellContent* Find(const CellAddress& a) const;
  [[nodiscard]] size_t size() const { return cells_.size(); }
  [[nodiscard]] bool empty() const { return cells_.empty(); }
  // Row-major.
  [[nodiscard]] const Map& cells() const { return cells_; }

 private:
  Map cells_;
};

// Value-style update: returns s with a set to raw. Throws ParseError.
[[nodiscard]] Sheet SetCell(Sheet s, const CellAddress& a, std::string_view raw);

// Resolves cells of one sheet state. Cells on a reference cycle (found
// statically over cell and range references) are #REF!; values are
// memoized for the lifetime of the resolver only.
class SheetResolver {
 public:
  explicit SheetResolver(const Sheet& sheet);

  [[nodiscard]] Value Resolve(const CellAddress& a);
  [[nodiscard]] bool OnCycle(const CellAddress& a) const;
  // Context whose resolve calls back into this resolver.
  [[nodiscard]] EvalContext Context();

 private:
  const Sheet& sheet_;
  std::set<CellAddress, CellOrder> cyclic_;
  std::map<CellAddress, Value, CellOrder> memo_;
};

[[nodiscard]] Value Resolve(const Sheet& s, const CellAddress& a);

// One entry per covered address, row-major.
[[nodiscard]] std::vector<std::pair<CellAddress, Value>> ExpandRange(const Sheet& s,
                                                                     const RangeRef& r);

// Annotated evaluation of the formula stored at a; nullopt if a is not a
// formula cell.
[[nodiscard]] std::optional<AnnotatedTree> EvaluateCell(const Sheet& s, const CellAddress& a);

}  // namespace equus

#endif  // EQUUS_SHEET_H
