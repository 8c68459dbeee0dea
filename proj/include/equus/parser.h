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

#ifndef EQUUS_PARSER_H
#define EQUUS_PARSER_H

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "equus/expr.h"
#include "equus/parse_error.h"

namespace equus {

struct Arity {
  size_t min = 0;
  std::optional<size_t> max;  // nullopt: variadic
  [[nodiscard]] bool Accepts(size_t n) const {
    return n >= min && (!max || n <= *max);
  }
};

// Maps an upper-case function name to its arity; nullopt for unknown names.
using ArityLookup = std::function<std::optional<Arity>(std::string_view)>;

inline constexpr int kMaxNesting = 256;

// Parses formula text (leading "=" optional) into an Expr, checking every
// call against the builtin function registry. Throws ParseError.
[[nodiscard]] Expr Parse(std::string_view input);
[[nodiscard]] Expr Parse(std::string_view input, const ArityLookup& arity);

// Canonical text: leading "=", upper-case names, no whitespace, and only the
// parentheses precedence and associativity require.
[[nodiscard]] std::string Unparse(const Expr& e);
// Unparse without the leading "=".
[[nodiscard]] std::string UnparseBody(const Expr& e);

// Indented one-node-per-line listing, e.g. "Binary add" / "  Number 2".
[[nodiscard]] std::string DumpAst(const Expr& e);

}  // namespace equus

#endif  // EQUUS_PARSER_H
