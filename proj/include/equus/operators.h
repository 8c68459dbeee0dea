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

#ifndef EQUUS_OPERATORS_H
#define EQUUS_OPERATORS_H

#include "equus/expr.h"
#include "equus/value.h"

namespace equus {

// Strict, left-biased: an Error on the left wins, then an Error on the
// right. Arithmetic coerces both operands to Number, "&" to Text;
// comparisons never coerce text and order Number < Text < Boolean, with
// Empty taking the type of the other side and text compared
// case-insensitively.
[[nodiscard]] Value ApplyBinary(BinaryOp op, const Value& left, const Value& right);

// Errors pass through; other operands are coerced to Number first.
[[nodiscard]] Value ApplyUnary(UnaryOp op, const Value& operand);

// Shared kernel of "^" and POWER: 0^0 is #NUM!, 0^negative is #DIV/0!.
[[nodiscard]] Value Power(double base, double exponent);

}  // namespace equus

#endif  // EQUUS_OPERATORS_H
