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

#include "equus/cli.h"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "equus/parse_error.h"
#include "equus/parser.h"
#include "equus/render.h"
#include "equus/scene.h"
#include "equus/service.h"
#include "equus/sheet.h"
#include "equus/sheet_io.h"

namespace equus {

namespace {

std::atomic<HttpServer*> g_server{nullptr};
std::atomic<bool> g_stop_requested{false};

// Operand text for a traced step: the value, quoted if text.
std::string StepOperand(const AnnotatedNode& n, bool in_operator) {
  if (n.expr->Is<RangeRef>()) return UnparseBody(*n.expr);
  const Value& v = n.value;
  switch (v.type()) {
    case Value::Type::kEmpty: return "<blank>";
    case Value::Type::kText: {
      std::string out = "\"";
      for (char c : v.text()) out += c == '"' ? std::string("\"\"") : std::string(1, c);
      return out + "\"";
    }
    case Value::Type::kNumber:
      if (in_operator && v.number() < 0) return "(" + RenderValue(v) + ")";
      return RenderValue(v);
    default: return RenderValue(v);
  }
}

std::string TraceValue(const AnnotatedNode& n) {
  if (n.expr->Is<RangeRef>()) {
    return "{" + RangePreview(n.range_values, static_cast<int>(n.range_values.size())) + "}" +
           (n.value.IsError() ? " " + RenderValue(n.value) : "");
  }
  return StepOperand(n, /*in_operator=*/false);
}

std::string Step(const AnnotatedNode& n) {
  const Expr& e = *n.expr;
  if (const auto* b = e.As<Binary>()) {
    return StepOperand(n.children[0], true) + std::string(Symbol(b->op)) +
           StepOperand(n.children[1], true);
  }
  if (const auto* u = e.As<Unary>()) {
    const std::string operand = StepOperand(n.children[0], true);
    return u->op == UnaryOp::kPercent ? operand + "%" : std::string(Symbol(u->op)) + operand;
  }
  if (const auto* c = e.As<Call>()) {
    std::string out = c->name + "(";
    for (size_t i = 0; i < n.children.size(); ++i) {
      if (i > 0) out += ",";
      out += StepOperand(n.children[i], false);
    }
    return out + ")";
  }
  return UnparseBody(e);
}

void TraceNode(const AnnotatedNode& n, int depth, std::ostringstream& out) {
  const std::string source = UnparseBody(*n.expr);
  out << std::string(static_cast<size_t>(depth) * 2, ' ') << source;
  if (!n.children.empty()) {
    const std::string step = Step(n);
    if (step != source) out << " = " << step;
  }
  out << " -> " << TraceValue(n);
  if (n.error_origin) out << "  [error origin]";
  if (!n.on_result_path) out << "  [not taken]";
  out << '\n';
  for (const AnnotatedNode& c : n.children) TraceNode(c, depth + 1, out);
}

std::string Normalize(const std::string& formula) {
  return !formula.empty() && formula[0] == '=' ? formula : "=" + formula;
}

void ReportParseError(const ParseError& e, const std::string& text, std::ostream& err) {
  err << "equus: parse error at position " << e.position() << ": " << e.message() << '\n';
  err << "  " << text << '\n';
  err << "  " << std::string(e.position(), ' ') << "^\n";
}

// Returns nullopt after reporting on err when the file cannot be read.
std::optional<Sheet> LoadWithReport(const std::string& path, std::ostream& err) {
  try {
    LoadResult r = LoadSheet(path);
    for (const SheetDiagnostic& d : r.diagnostics) {
      err << path << ":" << d.line << ": " << d.address << ": " << d.message;
      if (d.position > 0) err << " (position " << d.position << ")";
      err << '\n';
    }
    return std::move(r.sheet);
  } catch (const SheetIoError& e) {
    err << "equus: " << e.what() << '\n';
    return std::nullopt;
  }
}

struct Target {
  std::optional<std::string> formula;
  std::string sheet_path;
  std::string cell;
};

// What eval and viz operate on: an annotated tree, or for a non-formula
// cell just its value.
struct Subject {
  std::optional<AnnotatedTree> tree;
  Value value;
};

int ResolveTarget(const Target& t, Subject& subject, std::ostream& err) {
  if (!t.cell.empty() && t.sheet_path.empty()) {
    err << "equus: --cell requires --sheet\n";
    return kExitUsage;
  }
  if (!t.cell.empty() && t.formula) {
    err << "equus: give either a formula or --cell, not both\n";
    return kExitUsage;
  }
  if (t.cell.empty() && !t.formula) {
    err << "equus: missing formula\n";
    return kExitUsage;
  }
  std::optional<Sheet> sheet;
  if (!t.sheet_path.empty()) {
    sheet = LoadWithReport(t.sheet_path, err);
    if (!sheet) return kExitMissingFile;
  }
  if (!t.cell.empty()) {
    auto a = ParseAddress(t.cell);
    if (!a) {
      err << "equus: invalid cell address '" << t.cell << "'\n";
      return kExitUsage;
    }
    subject.tree = EvaluateCell(*sheet, *a);
    subject.value = subject.tree ? subject.tree->Result() : Resolve(*sheet, *a);
    return kExitOk;
  }
  const std::string text = Normalize(*t.formula);
  std::shared_ptr<const Expr> expr;
  try {
    expr = std::make_shared<const Expr>(Parse(text));
  } catch (const ParseError& e) {
    ReportParseError(e, text, err);
    return kExitParseError;
  }
  if (sheet) {
    SheetResolver resolver(*sheet);
    subject.tree = Evaluate(expr, resolver.Context());
  } else {
    subject.tree = Evaluate(expr, EmptyContext());
  }
  subject.value = subject.tree->Result();
  return kExitOk;
}

void AddTargetOptions(CLI::App* cmd, Target& t) {
  cmd->add_option("formula", t.formula, "Formula, with or without the leading '='");
  cmd->add_option("--sheet", t.sheet_path, "Sheet file (ADDRESS<TAB>raw per line)");
  cmd->add_option("--cell", t.cell, "Cell of --sheet to use instead of a formula");
}

int RunParse(const std::string& formula, bool ast, std::ostream& out, std::ostream& err) {
  const std::string text = Normalize(formula);
  try {
    Expr e = Parse(text);
    out << (ast ? DumpAst(e) : Unparse(e) + "\n");
  } catch (const ParseError& e) {
    ReportParseError(e, text, err);
    return kExitParseError;
  }
  return kExitOk;
}

int RunEval(const Target& t, bool trace, std::ostream& out, std::ostream& err) {
  Subject s;
  if (int code = ResolveTarget(t, s, err); code != kExitOk) return code;
  if (trace && s.tree) {
    out << Trace(*s.tree);
  } else {
    out << RenderValue(s.value) << '\n';
  }
  return kExitOk;
}

int RunViz(const Target& t, const std::string& format, const std::string& out_path,
           std::ostream& out, std::ostream& err) {
  Subject s;
  if (int code = ResolveTarget(t, s, err); code != kExitOk) return code;
  if (!s.tree) {
    err << "equus: " << t.cell << " does not hold a formula\n";
    return kExitUsage;
  }
  const SceneGraph g = Layout(*s.tree);
  const std::string doc = format == "json" ? ToJson(g) + "\n" : ToSvg(g);
  if (out_path.empty()) {
    out << doc;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
  file << doc;
  file.close();
  if (!file) {
    err << "equus: cannot write " << out_path << '\n';
    return kExitMissingFile;
  }
  return kExitOk;
}

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string sheet_path;
  std::string static_dir;
};

int RunServe(const ServeOptions& o, std::ostream& out, std::ostream& err,
             const CliHooks& hooks) {
  Sheet initial;
  if (!o.sheet_path.empty()) {
    auto sheet = LoadWithReport(o.sheet_path, err);
    if (!sheet) return kExitMissingFile;
    initial = std::move(*sheet);
  }
  if (!o.static_dir.empty() && !std::filesystem::is_directory(o.static_dir)) {
    err << "equus: static directory " << o.static_dir << " not found\n";
    return kExitMissingFile;
  }
  Service service(std::move(initial));
  HttpServer server(service, {o.static_dir, &err});
  if (!server.Bind(o.host, o.port)) {
    err << "equus: port " << o.port << " is unavailable on " << o.host << '\n';
    return kExitPortUnavailable;
  }
  out << "listening on http://" << o.host << ":" << server.port() << '\n' << std::flush;
  g_stop_requested = false;
  g_server = &server;
  if (hooks.on_listening) hooks.on_listening(server.port());
  if (!g_stop_requested) server.Run();
  g_server = nullptr;
  return kExitOk;
}

}  // namespace

std::string Trace(const AnnotatedTree& tree) {
  std::ostringstream out;
  TraceNode(tree.root(), 0, out);
  return out.str();
}

void RequestServeStop() {
  g_stop_requested = true;
  if (HttpServer* s = g_server.load()) s->Stop();
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
           const CliHooks& hooks) {
  CLI::App app{"Parse, evaluate and visualize spreadsheet formulae.", "equus"};
  app.require_subcommand(1);

  std::string formula;
  bool ast = false;
  CLI::App* parse = app.add_subcommand("parse", "Print the canonical formula or its AST");
  parse->add_option("formula", formula, "Formula, with or without the leading '='")->required();
  parse->add_flag("--ast", ast, "Print the syntax tree instead");

  Target eval_target;
  bool trace = false;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a formula or a sheet cell");
  AddTargetOptions(eval, eval_target);
  eval->add_flag("--trace", trace, "Print every subexpression with its value");

  Target viz_target;
  std::string format = "svg";
  std::string out_path;
  CLI::App* viz = app.add_subcommand("viz", "Render the dataflow diagram");
  AddTargetOptions(viz, viz_target);
  viz->add_option("--format", format, "svg or json")
      ->check(CLI::IsMember({"svg", "json"}));
  viz->add_option("--out", out_path, "Write to this file instead of standard output");

  ServeOptions serve_opts;
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--port", serve_opts.port, "TCP port (0 picks a free one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--host", serve_opts.host, "Interface to bind");
  serve->add_option("--sheet", serve_opts.sheet_path, "Sheet preloaded into every new session");
  serve->add_option("--static", serve_opts.static_dir, "Directory of UI assets served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (parse->parsed()) return RunParse(formula, ast, out, err);
  if (eval->parsed()) return RunEval(eval_target, trace, out, err);
  if (viz->parsed()) return RunViz(viz_target, format, out_path, out, err);
  return RunServe(serve_opts, out, err, hooks);
}

}  // namespace equus
