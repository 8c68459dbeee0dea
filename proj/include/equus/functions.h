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

#ifndef EQUUS_FUNCTIONS_H
#define EQUUS_FUNCTIONS_H

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equus/parser.h"
#include "equus/value.h"

namespace equus {

// One evaluated call argument. For a range argument `value` is the first
// Error among `cells` (row-major) or Empty; for a single-cell reference
// `cells` holds just that cell's value.
struct Argument {
  Value value;
  std::vector<Value> cells;
  bool is_reference = false;

  static Argument Scalar(Value v) { return Argument{std::move(v), {}, false}; }
  static Argument Reference(Value v) {
    Argument a{v, {v}, true};
    return a;
  }
  static Argument Range(std::vector<Value> cells);
};

enum class Strictness {
  kStrict,     // any Error argument is the result (leftmost wins)
  kSelective,  // result depends on some arguments only (IF)
};

using Kernel = std::function<Value(std::span<const Argument>)>;

struct FunctionSpec {
  std::string name;
  Arity arity;
  Strictness strictness = Strictness::kStrict;
  bool accepts_ranges = false;
  Kernel kernel;
};

class FunctionRegistry {
 public:
  void Add(FunctionSpec spec);
  [[nodiscard]] const FunctionSpec* Find(std::string_view name) const;
  [[nodiscard]] std::vector<const FunctionSpec*> All() const;
  [[nodiscard]] ArityLookup Arities() const;

 private:
  std::map<std::string, FunctionSpec, std::less<>> specs_;
};

// SUM AVERAGE MIN MAX COUNT IF AND OR NOT TRUE FALSE SIN COS TAN SQRT ABS
// ROUND TRUNC PI POWER MOD. Built once, shared read-only.
[[nodiscard]] const FunctionRegistry& BuiltinRegistry();

// Applies a function to evaluated arguments. Strict specs short-circuit to
// the leftmost Error argument before the kernel runs.
[[nodiscard]] Value CallFunction(const FunctionSpec& spec, std::span<const Argument> args);
[[nodiscard]] Value CallFunction(const FunctionSpec& spec, std::span<const Value> args);

// Round or truncate x at `digits` decimal places (negative digits round to
// tens, hundreds, ...), working on x's 15-significant-digit decimal form so
// that ROUND(2.675, 2) gives 2.68.
enum class RoundMode { kHalfAwayFromZero, kTowardZero };
[[nodiscard]] double RoundDecimal(double x, int digits, RoundMode mode);

}  // namespace equus

#endif  // EQUUS_FUNCTIONS_H
