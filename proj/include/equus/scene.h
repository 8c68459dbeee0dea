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

#ifndef EQUUS_SCENE_H
#define EQUUS_SCENE_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "equus/evaluator.h"

namespace equus {

enum class NodeKind { kLiteral, kCellRef, kRangeRef, kOperator, kFunction, kResult };
enum class Shape { kRoundedRect, kTag, kCircle, kRect, kCapsule };
enum class StyleClass { kNormal, kError, kErrorOrigin, kInactiveBranch };

[[nodiscard]] std::string_view ToString(NodeKind k);
[[nodiscard]] std::string_view ToString(Shape s);
[[nodiscard]] std::string_view ToString(StyleClass s);
[[nodiscard]] std::optional<NodeKind> NodeKindFromString(std::string_view s);
[[nodiscard]] std::optional<Shape> ShapeFromString(std::string_view s);
[[nodiscard]] std::optional<StyleClass> StyleClassFromString(std::string_view s);

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point&) const = default;
};

struct SceneNode {
  // Path of child indices from the root: "r", "r.0", "r.1.0", ...; the
  // extra result node is "result".
  std::string id;
  NodeKind kind = NodeKind::kLiteral;
  Shape shape = Shape::kRoundedRect;
  std::string label;  // operator symbol, function name, reference, literal source
  std::string value;  // rendered value
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;
  // error/error-origin win over inactive-branch; `dimmed` marks every node
  // off the result path, errors included.
  StyleClass style = StyleClass::kNormal;
  bool dimmed = false;
  std::optional<int> ref_group;

  bool operator==(const SceneNode&) const = default;
};

// Runs from a child to its parent (dataflow direction), plus root -> result.
struct SceneEdge {
  std::string from;
  std::string to;
  std::vector<Point> points;
  bool operator==(const SceneEdge&) const = default;
};

struct SceneGraph {
  std::vector<SceneNode> nodes;
  std::vector<SceneEdge> edges;
  double width = 0;
  double height = 0;

  bool operator==(const SceneGraph&) const = default;
  [[nodiscard]] const SceneNode* Find(std::string_view id) const;
};

struct LayoutConfig {
  double layer_gap = 40;    // horizontal space between depth layers
  double sibling_gap = 14;  // vertical space between stacked subtrees
  double char_width = 8;
  double line_height = 18;
  double padding = 12;
  int max_range_preview = 5;
  int max_label_chars = 40;
};

struct Size {
  double w = 0;
  double h = 0;
  bool operator==(const Size&) const = default;
};

// width = padding + char_width * longest shown label (in code points);
// height = padding + line_height * shown label count. Literals show only
// their value; operator circles are square.
[[nodiscard]] Size MeasureNode(NodeKind kind, std::string_view primary_label,
                               std::string_view value_label, const LayoutConfig& cfg);

// "1, 2, 3, 4, 5, …(5 more)" for ten cells at a preview of five.
[[nodiscard]] std::string RangePreview(std::span<const Value> values, int max_preview);

// Layered left-to-right tree drawing: leaves in the first layer, each parent
// one layer right of its deepest child, result node last. Sibling subtrees
// are stacked in source order and pushed together until their per-layer
// contours touch; parents are centered on their children.
[[nodiscard]] SceneGraph Layout(const AnnotatedTree& tree, const LayoutConfig& cfg = {});

}  // namespace equus

#endif  // EQUUS_SCENE_H
