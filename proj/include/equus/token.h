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

#ifndef EQUUS_TOKEN_H
#define EQUUS_TOKEN_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace equus {

enum class TokenKind {
  kNumber,
  kText,
  kBoolean,
  kCellRef,
  kIdentifier,
  kOperator,
  kLeftParen,
  kRightParen,
  kComma,
  kColon,
};

[[nodiscard]] std::string_view TokenKindName(TokenKind kind);

struct Span {
  size_t offset = 0;
  size_t length = 0;
  bool operator==(const Span&) const = default;
};

struct Token {
  TokenKind kind;
  std::string lexeme;  // exactly the source bytes under span
  Span span;
  bool operator==(const Token&) const = default;
};

// Splits formula text into tokens. A leading "=" is consumed and not
// emitted; whitespace between tokens is skipped. Throws ParseError on a
// character outside the lexical alphabet, an unterminated text literal, a
// malformed exponent, or a number that overflows a double.
[[nodiscard]] std::vector<Token> Tokenize(std::string_view input);

}  // namespace equus

#endif  // EQUUS_TOKEN_H
