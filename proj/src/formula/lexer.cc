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

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "equus/address.h"
#include "equus/parse_error.h"
#include "equus/token.h"
#include "json.hpp"

namespace equus {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kNumber: return "number";
    case TokenKind::kText: return "text-literal";
    case TokenKind::kBoolean: return "boolean-literal";
    case TokenKind::kCellRef: return "cell-ref";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kLeftParen: return "left-paren";
    case TokenKind::kRightParen: return "right-paren";
    case TokenKind::kComma: return "comma";
    case TokenKind::kColon: return "colon";
  }
  return "?";
}

std::string ParseError::ToRecord() const {
  nlohmann::ordered_json j;
  j["position"] = position_;
  j["message"] = message_;
  j["expected"] = expected_;
  return j.dump();
}

namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool IsAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool IsWordChar(char c) {
  return IsAlpha(c) || IsDigit(c) || c == '_' || c == '.' || c == '$';
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  std::vector<Token> Run() {
    if (!input_.empty() && input_[0] == '=') pos_ = 1;
    std::vector<Token> tokens;
    for (;;) {
      while (pos_ < input_.size() && IsSpace(input_[pos_])) ++pos_;
      if (pos_ >= input_.size()) break;
      tokens.push_back(Next());
    }
    return tokens;
  }

 private:
  Token Make(TokenKind kind, size_t begin) {
    return Token{kind, std::string(input_.substr(begin, pos_ - begin)),
                 Span{begin, pos_ - begin}};
  }

  char PeekNonSpace(size_t from) const {
    while (from < input_.size() && IsSpace(input_[from])) ++from;
    return from < input_.size() ? input_[from] : '\0';
  }

  Token Next() {
    const size_t begin = pos_;
    const char c = input_[pos_];
    if (IsDigit(c) || (c == '.' && pos_ + 1 < input_.size() && IsDigit(input_[pos_ + 1]))) {
      return Number(begin);
    }
    if (c == '"') return Text(begin);
    if (IsAlpha(c) || c == '_' || c == '$') return Word(begin);
    ++pos_;
    switch (c) {
      case '(': return Make(TokenKind::kLeftParen, begin);
      case ')': return Make(TokenKind::kRightParen, begin);
      case ',': return Make(TokenKind::kComma, begin);
      case ':': return Make(TokenKind::kColon, begin);
      case '+': case '-': case '*': case '/': case '^': case '&': case '%':
      case '=':
        return Make(TokenKind::kOperator, begin);
      case '<':
        if (pos_ < input_.size() && (input_[pos_] == '=' || input_[pos_] == '>')) ++pos_;
        return Make(TokenKind::kOperator, begin);
      case '>':
        if (pos_ < input_.size() && input_[pos_] == '=') ++pos_;
        return Make(TokenKind::kOperator, begin);
      default:
        break;
    }
    throw ParseError(begin, "unexpected character");
  }

  Token Number(size_t begin) {
    while (pos_ < input_.size() && IsDigit(input_[pos_])) ++pos_;
    if (pos_ < input_.size() && input_[pos_] == '.') {
      ++pos_;
      while (pos_ < input_.size() && IsDigit(input_[pos_])) ++pos_;
    }
    if (pos_ < input_.size() && (input_[pos_] == 'e' || input_[pos_] == 'E')) {
      size_t p = pos_ + 1;
      if (p < input_.size() && (input_[p] == '+' || input_[p] == '-')) ++p;
      if (p >= input_.size() || !IsDigit(input_[p])) {
        throw ParseError(pos_, "malformed exponent", {"digit"});
      }
      while (p < input_.size() && IsDigit(input_[p])) ++p;
      pos_ = p;
    }
    Token t = Make(TokenKind::kNumber, begin);
    double v = std::strtod(t.lexeme.c_str(), nullptr);
    if (!std::isfinite(v)) throw ParseError(begin, "number out of range");
    return t;
  }

  Token Text(size_t begin) {
    ++pos_;
    for (;;) {
      if (pos_ >= input_.size()) {
        throw ParseError(begin, "unterminated text literal", {"\""});
      }
      if (input_[pos_] == '"') {
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '"') {
          pos_ += 2;
          continue;
        }
        ++pos_;
        return Make(TokenKind::kText, begin);
      }
      ++pos_;
    }
  }

  Token Word(size_t begin) {
    while (pos_ < input_.size() && IsWordChar(input_[pos_])) ++pos_;
    std::string_view word = input_.substr(begin, pos_ - begin);
    const bool call_follows = PeekNonSpace(pos_) == '(';
    if (!call_follows && ParseAddress(word)) return Make(TokenKind::kCellRef, begin);
    if (word.find('$') != std::string_view::npos) {
      throw ParseError(begin, "invalid cell reference");
    }
    if (word[0] == '_' || IsAlpha(word[0])) {
      std::string upper = Upper(word);
      if (!call_follows && (upper == "TRUE" || upper == "FALSE")) {
        return Make(TokenKind::kBoolean, begin);
      }
      return Make(TokenKind::kIdentifier, begin);
    }
    throw ParseError(begin, "unexpected character");
  }

  std::string_view input_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<Token> Tokenize(std::string_view input) { return Lexer(input).Run(); }

}  // namespace equus
