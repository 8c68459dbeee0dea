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

#include <algorithm>
#include <map>

#include "equus/parser.h"
#include "equus/scene.h"

namespace equus {

std::string_view ToString(NodeKind k) {
  switch (k) {
    case NodeKind::kLiteral: return "literal";
    case NodeKind::kCellRef: return "cell-ref";
    case NodeKind::kRangeRef: return "range-ref";
    case NodeKind::kOperator: return "operator";
    case NodeKind::kFunction: return "function";
    case NodeKind::kResult: return "result";
  }
  return "?";
}

std::string_view ToString(Shape s) {
  switch (s) {
    case Shape::kRoundedRect: return "rounded-rect";
    case Shape::kTag: return "tag";
    case Shape::kCircle: return "circle";
    case Shape::kRect: return "rect";
    case Shape::kCapsule: return "capsule";
  }
  return "?";
}

std::string_view ToString(StyleClass s) {
  switch (s) {
    case StyleClass::kNormal: return "normal";
    case StyleClass::kError: return "error";
    case StyleClass::kErrorOrigin: return "error-origin";
    case StyleClass::kInactiveBranch: return "inactive-branch";
  }
  return "?";
}

namespace {

template <typename E, size_t N>
std::optional<E> FromString(std::string_view s, const E (&all)[N]) {
  for (E e : all) {
    if (ToString(e) == s) return e;
  }
  return std::nullopt;
}

constexpr NodeKind kKinds[] = {NodeKind::kLiteral, NodeKind::kCellRef, NodeKind::kRangeRef,
                               NodeKind::kOperator, NodeKind::kFunction, NodeKind::kResult};
constexpr Shape kShapes[] = {Shape::kRoundedRect, Shape::kTag, Shape::kCircle, Shape::kRect,
                             Shape::kCapsule};
constexpr StyleClass kStyles[] = {StyleClass::kNormal, StyleClass::kError,
                                  StyleClass::kErrorOrigin, StyleClass::kInactiveBranch};

}  // namespace

std::optional<NodeKind> NodeKindFromString(std::string_view s) { return FromString(s, kKinds); }
std::optional<Shape> ShapeFromString(std::string_view s) { return FromString(s, kShapes); }
std::optional<StyleClass> StyleClassFromString(std::string_view s) {
  return FromString(s, kStyles);
}

const SceneNode* SceneGraph::Find(std::string_view id) const {
  for (const SceneNode& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

namespace {

size_t CodePoints(std::string_view s) {
  size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

// Labels are drawn on one line: control characters are replaced and long
// labels cut to max_chars code points with a trailing ellipsis.
std::string CleanLabel(std::string_view s, int max_chars) {
  std::string out;
  size_t count = 0;
  const size_t limit = static_cast<size_t>(std::max(max_chars, 1));
  for (size_t i = 0; i < s.size();) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len = 1;
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    len = std::min(len, s.size() - i);
    if (count == limit) {
      out += "…";
      return out;
    }
    if (c == '\n') {
      out += "↵";
    } else if (c < 0x20 || c == 0x7F) {
      out += "\xEF\xBF\xBD";
    } else {
      out.append(s.substr(i, len));
    }
    ++count;
    i += len;
  }
  return out;
}

NodeKind KindOf(const Expr& e) {
  if (e.Is<CellRef>()) return NodeKind::kCellRef;
  if (e.Is<RangeRef>()) return NodeKind::kRangeRef;
  if (e.Is<Unary>() || e.Is<Binary>()) return NodeKind::kOperator;
  if (e.Is<Call>()) return NodeKind::kFunction;
  return NodeKind::kLiteral;
}

Shape ShapeOf(NodeKind k) {
  switch (k) {
    case NodeKind::kLiteral: return Shape::kRoundedRect;
    case NodeKind::kCellRef:
    case NodeKind::kRangeRef: return Shape::kTag;
    case NodeKind::kOperator: return Shape::kCircle;
    case NodeKind::kFunction: return Shape::kRect;
    case NodeKind::kResult: return Shape::kCapsule;
  }
  return Shape::kRect;
}

std::string PrimaryLabel(const Expr& e) {
  if (const auto* c = e.As<CellRef>()) return FormatAddress(c->address.Relative());
  if (const auto* r = e.As<RangeRef>()) {
    return FormatAddress(r->start.Relative()) + ":" + FormatAddress(r->end.Relative());
  }
  if (const auto* u = e.As<Unary>()) return std::string(Symbol(u->op));
  if (const auto* b = e.As<Binary>()) return std::string(Symbol(b->op));
  if (const auto* call = e.As<Call>()) return call->name;
  return UnparseBody(e);
}

StyleClass StyleOf(const AnnotatedNode& n) {
  if (n.error_origin) return StyleClass::kErrorOrigin;
  if (n.value.IsError()) return StyleClass::kError;
  if (!n.on_result_path) return StyleClass::kInactiveBranch;
  return StyleClass::kNormal;
}

struct Contour {
  // layer -> (top, bottom)
  std::map<int, std::pair<double, double>> extent;

  void Add(int layer, double top, double bottom) {
    auto [it, inserted] = extent.try_emplace(layer, top, bottom);
    if (!inserted) {
      it->second.first = std::min(it->second.first, top);
      it->second.second = std::max(it->second.second, bottom);
    }
  }
};

struct Box {
  SceneNode node;
  int layer = 0;
  std::vector<size_t> children;
};

class LayoutBuilder {
 public:
  LayoutBuilder(const AnnotatedTree& tree, const LayoutConfig& cfg) : tree_(tree), cfg_(cfg) {}

  SceneGraph Run() {
    const size_t root = Collect(tree_.root(), "r");
    const size_t result = AddResult(root);
    Place(root);
    CenterResult(result, root);
    return Finish(root, result);
  }

 private:
  size_t Collect(const AnnotatedNode& n, const std::string& id) {
    Box box;
    SceneNode& s = box.node;
    s.id = id;
    s.kind = KindOf(*n.expr);
    s.shape = ShapeOf(s.kind);
    s.label = CleanLabel(PrimaryLabel(*n.expr), cfg_.max_label_chars);
    if (s.kind == NodeKind::kRangeRef && !n.range_values.empty()) {
      // Already bounded by max_range_preview.
      s.value = CleanLabel(RangePreview(n.range_values, cfg_.max_range_preview), 1 << 20);
    } else {
      s.value = CleanLabel(RenderValue(n.value), cfg_.max_label_chars);
    }
    s.style = StyleOf(n);
    s.dimmed = !n.on_result_path;
    s.ref_group = n.ref_group;
    Size size = MeasureNode(s.kind, s.label, s.value, cfg_);
    s.w = size.w;
    s.h = size.h;

    const size_t index = boxes_.size();
    boxes_.push_back(std::move(box));
    int layer = 0;
    for (size_t i = 0; i < n.children.size(); ++i) {
      const size_t child = Collect(n.children[i], id + "." + std::to_string(i));
      boxes_[index].children.push_back(child);
      layer = std::max(layer, boxes_[child].layer + 1);
    }
    boxes_[index].layer = layer;
    return index;
  }

  size_t AddResult(size_t root) {
    Box box;
    SceneNode& s = box.node;
    s.id = "result";
    s.kind = NodeKind::kResult;
    s.shape = Shape::kCapsule;
    s.label = "=";
    const Value result = tree_.Result();
    s.value = CleanLabel(RenderValue(result), cfg_.max_label_chars);
    s.style = result.IsError() ? StyleClass::kError : StyleClass::kNormal;
    Size size = MeasureNode(s.kind, s.label, s.value, cfg_);
    s.w = size.w;
    s.h = size.h;
    box.layer = boxes_[root].layer + 1;
    boxes_.push_back(std::move(box));
    return boxes_.size() - 1;
  }

  void Shift(size_t index, double dy) {
    boxes_[index].node.y += dy;
    for (size_t c : boxes_[index].children) Shift(c, dy);
  }

  double Center(size_t index) const { return boxes_[index].node.y + boxes_[index].node.h / 2; }

  // Lays out the subtree at `index` with its own frame; returns its contour.
  Contour Place(size_t index) {
    Box& box = boxes_[index];
    Contour contour;
    if (box.children.empty()) {
      box.node.y = 0;
      contour.Add(box.layer, 0, box.node.h);
      return contour;
    }
    const std::vector<size_t> children = box.children;
    for (size_t i = 0; i < children.size(); ++i) {
      Contour next = Place(children[i]);
      if (i > 0) {
        double shift = -1e300;
        for (const auto& [layer, span] : next.extent) {
          auto it = contour.extent.find(layer);
          if (it == contour.extent.end()) continue;
          shift = std::max(shift, it->second.second + cfg_.sibling_gap - span.first);
        }
        if (shift == -1e300) shift = contour.extent.begin()->second.second + cfg_.sibling_gap;
        Shift(children[i], shift);
        for (const auto& [layer, span] : next.extent) {
          contour.Add(layer, span.first + shift, span.second + shift);
        }
      } else {
        contour = std::move(next);
      }
    }
    Box& parent = boxes_[index];
    const double mid = (Center(children.front()) + Center(children.back())) / 2;
    parent.node.y = mid - parent.node.h / 2;
    contour.Add(parent.layer, parent.node.y, parent.node.y + parent.node.h);
    return contour;
  }

  void CenterResult(size_t result, size_t root) {
    boxes_[result].node.y = Center(root) - boxes_[result].node.h / 2;
  }

  SceneGraph Finish(size_t root, size_t result) {
    const double margin = std::min(cfg_.layer_gap, cfg_.sibling_gap) / 2;
    const int layers = boxes_[result].layer + 1;
    std::vector<double> column_width(static_cast<size_t>(layers), 0);
    double min_y = 0;
    for (const Box& b : boxes_) {
      column_width[static_cast<size_t>(b.layer)] =
          std::max(column_width[static_cast<size_t>(b.layer)], b.node.w);
      min_y = std::min(min_y, b.node.y);
    }
    std::vector<double> column_x(static_cast<size_t>(layers), margin);
    for (size_t l = 1; l < column_x.size(); ++l) {
      column_x[l] = column_x[l - 1] + column_width[l - 1] + cfg_.layer_gap;
    }

    SceneGraph g;
    for (Box& b : boxes_) {
      const auto l = static_cast<size_t>(b.layer);
      b.node.x = column_x[l] + (column_width[l] - b.node.w) / 2;
      b.node.y = b.node.y - min_y + margin;
    }
    double max_x = 0;
    double max_y = 0;
    for (const Box& b : boxes_) {
      max_x = std::max(max_x, b.node.x + b.node.w);
      max_y = std::max(max_y, b.node.y + b.node.h);
    }
    g.width = max_x + margin;
    g.height = max_y + margin;

    // Pre-order nodes, result last; one outgoing edge per tree node.
    std::vector<std::pair<size_t, size_t>> edges;
    Order(root, g, edges);
    g.nodes.push_back(boxes_[result].node);
    edges.emplace_back(root, result);
    for (const auto& [from, to] : edges) {
      g.edges.push_back(Route(boxes_[from], boxes_[to], column_x));
    }
    return g;
  }

  void Order(size_t index, SceneGraph& g, std::vector<std::pair<size_t, size_t>>& edges) {
    g.nodes.push_back(boxes_[index].node);
    for (size_t c : boxes_[index].children) {
      Order(c, g, edges);
      edges.emplace_back(c, index);
    }
  }

  // Horizontal out of the child, vertical in the gap before the parent's
  // column, horizontal into the parent.
  SceneEdge Route(const Box& from, const Box& to, const std::vector<double>& column_x) const {
    SceneEdge e;
    e.from = from.node.id;
    e.to = to.node.id;
    const double fx = from.node.x + from.node.w;
    const double fy = from.node.y + from.node.h / 2;
    const double tx = to.node.x;
    const double ty = to.node.y + to.node.h / 2;
    if (fy == ty) {
      e.points = {{fx, fy}, {tx, ty}};
    } else {
      const double elbow = column_x[static_cast<size_t>(to.layer)] - cfg_.layer_gap / 2;
      e.points = {{fx, fy}, {elbow, fy}, {elbow, ty}, {tx, ty}};
    }
    return e;
  }

  const AnnotatedTree& tree_;
  const LayoutConfig& cfg_;
  std::vector<Box> boxes_;
};

}  // namespace

Size MeasureNode(NodeKind kind, std::string_view primary_label, std::string_view value_label,
                 const LayoutConfig& cfg) {
  size_t longest = CodePoints(value_label);
  double lines = 1;
  if (kind != NodeKind::kLiteral) {
    longest = std::max(longest, CodePoints(primary_label));
    lines = 2;
  }
  longest = std::max<size_t>(longest, 1);
  Size s{cfg.padding + cfg.char_width * static_cast<double>(longest),
         cfg.padding + cfg.line_height * lines};
  if (kind == NodeKind::kOperator) {
    const double side = std::max(s.w, s.h);
    s = {side, side};
  }
  return s;
}

std::string RangePreview(std::span<const Value> values, int max_preview) {
  std::string out;
  const size_t shown = std::min(values.size(), static_cast<size_t>(std::max(max_preview, 0)));
  for (size_t i = 0; i < shown; ++i) {
    if (i > 0) out += ", ";
    out += RenderValue(values[i]);
  }
  if (shown < values.size()) {
    if (shown > 0) out += ", ";
    out += "…(" + std::to_string(values.size() - shown) + " more)";
  }
  return out;
}

SceneGraph Layout(const AnnotatedTree& tree, const LayoutConfig& cfg) {
  return LayoutBuilder(tree, cfg).Run();
}

}  // namespace equus
