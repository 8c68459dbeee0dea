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

#include <sstream>

#include "equus/parser.h"

namespace equus {

namespace {

void Write(const Expr& e, std::string& out);

void WriteOperand(const Expr& e, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  Write(e, out);
  if (parenthesize) out += ')';
}

void Write(const Expr& e, std::string& out) {
  if (const auto* n = e.As<NumberLit>()) {
    out += n->written;
  } else if (const auto* t = e.As<TextLit>()) {
    out += '"';
    for (char c : t->value) {
      out += c;
      if (c == '"') out += '"';
    }
    out += '"';
  } else if (const auto* b = e.As<BoolLit>()) {
    out += b->value ? "TRUE" : "FALSE";
  } else if (const auto* c = e.As<CellRef>()) {
    out += FormatAddress(c->address);
  } else if (const auto* r = e.As<RangeRef>()) {
    out += FormatAddress(r->start);
    out += ':';
    out += FormatAddress(r->end);
  } else if (const auto* u = e.As<Unary>()) {
    const Expr& operand = e.children[0];
    const int p = Precedence(u->op);
    if (u->op == UnaryOp::kPercent) {
      WriteOperand(operand, NodePrecedence(operand) < p, out);
      out += '%';
    } else {
      out += Symbol(u->op);
      WriteOperand(operand, NodePrecedence(operand) < p, out);
    }
  } else if (const auto* bin = e.As<Binary>()) {
    const int p = Precedence(bin->op);
    WriteOperand(e.children[0], NodePrecedence(e.children[0]) < p, out);
    out += Symbol(bin->op);
    // Left-associative: an equal-precedence right operand needs parentheses.
    WriteOperand(e.children[1], NodePrecedence(e.children[1]) <= p, out);
  } else if (const auto* call = e.As<Call>()) {
    out += call->name;
    out += '(';
    for (size_t i = 0; i < e.children.size(); ++i) {
      if (i > 0) out += ',';
      Write(e.children[i], out);
    }
    out += ')';
  }
}

void Dump(const Expr& e, int depth, std::ostringstream& out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ');
  if (const auto* n = e.As<NumberLit>()) {
    out << "Number " << n->written;
  } else if (e.Is<TextLit>()) {
    out << "Text " << UnparseBody(e);
  } else if (const auto* b = e.As<BoolLit>()) {
    out << "Boolean " << (b->value ? "TRUE" : "FALSE");
  } else if (const auto* c = e.As<CellRef>()) {
    out << "CellRef " << FormatAddress(c->address);
  } else if (e.Is<RangeRef>()) {
    out << "RangeRef " << UnparseBody(e);
  } else if (const auto* u = e.As<Unary>()) {
    out << "Unary " << Name(u->op);
  } else if (const auto* bin = e.As<Binary>()) {
    out << "Binary " << Name(bin->op);
  } else if (const auto* call = e.As<Call>()) {
    out << "Call " << call->name;
  }
  out << '\n';
  for (const Expr& child : e.children) Dump(child, depth + 1, out);
}

}  // namespace

std::string UnparseBody(const Expr& e) {
  std::string out;
  Write(e, out);
  return out;
}

std::string Unparse(const Expr& e) { return "=" + UnparseBody(e); }

std::string DumpAst(const Expr& e) {
  std::ostringstream out;
  Dump(e, 0, out);
  return out.str();
}

}  // namespace equus
