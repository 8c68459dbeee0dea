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

#include "equus/parser.h"

#include <cctype>
#include <cstdlib>
#include <vector>

#include "equus/functions.h"
#include "equus/token.h"

namespace equus {

namespace {

const std::vector<std::string> kOperandKinds = {
    "number", "text-literal", "boolean-literal", "cell-ref",
    "identifier", "left-paren", "operator"};

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::optional<BinaryOp> BinaryFromLexeme(std::string_view s) {
  if (s == "+") return BinaryOp::kAdd;
  if (s == "-") return BinaryOp::kSubtract;
  if (s == "*") return BinaryOp::kMultiply;
  if (s == "/") return BinaryOp::kDivide;
  if (s == "^") return BinaryOp::kPower;
  if (s == "&") return BinaryOp::kConcat;
  if (s == "=") return BinaryOp::kEq;
  if (s == "<>") return BinaryOp::kNeq;
  if (s == "<") return BinaryOp::kLt;
  if (s == ">") return BinaryOp::kGt;
  if (s == "<=") return BinaryOp::kLe;
  if (s == ">=") return BinaryOp::kGe;
  return std::nullopt;
}

std::string Unescape(std::string_view lexeme) {
  std::string out;
  for (size_t i = 1; i + 1 < lexeme.size(); ++i) {
    out += lexeme[i];
    if (lexeme[i] == '"') ++i;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view input, std::vector<Token> tokens, const ArityLookup& arity)
      : input_(input), tokens_(std::move(tokens)), arity_(arity) {}

  Expr ParseFormula() {
    if (tokens_.empty()) {
      throw ParseError(input_.size(), "empty formula", kOperandKinds);
    }
    Expr e = ParseExpr(0, 0);
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      throw ParseError(t.span.offset,
                       "unexpected " + std::string(TokenKindName(t.kind)) + " '" +
                           t.lexeme + "'",
                       {"operator", "end of input"});
    }
    return e;
  }

 private:
  const Token* Peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

  size_t Offset() const {
    return pos_ < tokens_.size() ? tokens_[pos_].span.offset : input_.size();
  }

  const Token& Expect(TokenKind kind) {
    const Token* t = Peek();
    if (t == nullptr || t->kind != kind) {
      std::string what = t ? "'" + t->lexeme + "'" : "end of input";
      throw ParseError(Offset(), "expected " + std::string(TokenKindName(kind)) +
                                     ", found " + what,
                       {std::string(TokenKindName(kind))});
    }
    return tokens_[pos_++];
  }

  Expr ParseExpr(int min_precedence, int depth) {
    if (depth > kMaxNesting) throw ParseError(Offset(), "formula nested too deeply");
    Expr left = ParsePrefix(depth);
    for (;;) {
      const Token* t = Peek();
      if (t == nullptr || t->kind != TokenKind::kOperator) break;
      if (t->lexeme == "%") {
        if (precedence::kPercent < min_precedence) break;
        ++pos_;
        left = Expr::MakeUnary(UnaryOp::kPercent, std::move(left));
        continue;
      }
      auto op = BinaryFromLexeme(t->lexeme);
      if (!op || Precedence(*op) < min_precedence) break;
      ++pos_;
      // All binary operators are left-associative, "^" included.
      Expr right = ParseExpr(Precedence(*op) + 1, depth + 1);
      left = Expr::MakeBinary(*op, std::move(left), std::move(right));
    }
    return left;
  }

  Expr ParsePrefix(int depth) {
    const Token* t = Peek();
    if (t == nullptr) throw ParseError(input_.size(), "expected operand", kOperandKinds);
    const Token& tok = tokens_[pos_++];
    switch (tok.kind) {
      case TokenKind::kNumber:
        return Expr::Number(std::strtod(tok.lexeme.c_str(), nullptr), tok.lexeme);
      case TokenKind::kText:
        return Expr::Text(Unescape(tok.lexeme));
      case TokenKind::kBoolean:
        return Expr::Bool(Upper(tok.lexeme) == "TRUE");
      case TokenKind::kCellRef:
        return ParseReference(tok);
      case TokenKind::kIdentifier:
        return ParseCall(tok, depth);
      case TokenKind::kLeftParen: {
        Expr inner = ParseExpr(0, depth + 1);
        Expect(TokenKind::kRightParen);
        return inner;
      }
      case TokenKind::kOperator:
        if (tok.lexeme == "-" || tok.lexeme == "+") {
          UnaryOp op = tok.lexeme == "-" ? UnaryOp::kNegate : UnaryOp::kPlus;
          return Expr::MakeUnary(op, ParseExpr(precedence::kPrefix, depth + 1));
        }
        break;
      default:
        break;
    }
    throw ParseError(tok.span.offset, "expected operand, found '" + tok.lexeme + "'",
                     kOperandKinds);
  }

  Expr ParseReference(const Token& tok) {
    CellAddress start = *ParseAddress(tok.lexeme);
    const Token* t = Peek();
    if (t == nullptr || t->kind != TokenKind::kColon) return Expr::Cell(start);
    ++pos_;
    const Token& end_tok = Expect(TokenKind::kCellRef);
    return Expr::Range(start, *ParseAddress(end_tok.lexeme));
  }

  Expr ParseCall(const Token& tok, int depth) {
    std::string name = Upper(tok.lexeme);
    const Token* t = Peek();
    if (t == nullptr || t->kind != TokenKind::kLeftParen) {
      throw ParseError(tok.span.offset, "unknown name '" + tok.lexeme + "'");
    }
    auto arity = arity_(name);
    if (!arity) {
      throw ParseError(tok.span.offset, "unknown function '" + name + "'");
    }
    ++pos_;
    std::vector<Expr> args;
    const Token* next = Peek();
    if (next != nullptr && next->kind == TokenKind::kRightParen) {
      ++pos_;
    } else {
      for (;;) {
        args.push_back(ParseExpr(0, depth + 1));
        const Token* sep = Peek();
        if (sep != nullptr && sep->kind == TokenKind::kComma) {
          ++pos_;
          continue;
        }
        if (sep != nullptr && sep->kind == TokenKind::kRightParen) {
          ++pos_;
          break;
        }
        throw ParseError(Offset(),
                         sep ? "expected ',' or ')', found '" + sep->lexeme + "'"
                             : "expected ',' or ')', found end of input",
                         {"comma", "right-paren"});
      }
    }
    if (!arity->Accepts(args.size())) {
      std::string bounds = std::to_string(arity->min);
      if (!arity->max) {
        bounds = "at least " + bounds;
      } else if (*arity->max != arity->min) {
        bounds += " to " + std::to_string(*arity->max);
      }
      throw ParseError(tok.span.offset, name + " takes " + bounds + " argument(s), got " +
                                            std::to_string(args.size()));
    }
    return Expr::MakeCall(std::move(name), std::move(args));
  }

  std::string_view input_;
  std::vector<Token> tokens_;
  const ArityLookup& arity_;
  size_t pos_ = 0;
};

}  // namespace

Expr Parse(std::string_view input, const ArityLookup& arity) {
  return Parser(input, Tokenize(input), arity).ParseFormula();
}

Expr Parse(std::string_view input) {
  static const ArityLookup builtin = [](std::string_view name) -> std::optional<Arity> {
    const FunctionSpec* spec = BuiltinRegistry().Find(name);
    if (spec == nullptr) return std::nullopt;
    return spec->arity;
  };
  return Parse(input, builtin);
}

}  // namespace equus
