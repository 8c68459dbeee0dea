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

#ifndef EQUUS_RENDER_H
#define EQUUS_RENDER_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "equus/scene.h"

namespace equus {

struct Palette {
  std::string fill;
  std::string stroke;
  std::string text;
};

struct Theme {
  std::string font_family = "Helvetica, Arial, sans-serif";
  double font_size = 13;
  Palette normal{"#ffffff", "#4a4a4a", "#1a1a1a"};
  Palette result{"#e8f0fe", "#1a56b0", "#0b2e6b"};
  Palette error{"#fde4e2", "#c62828", "#8e1111"};
  Palette error_origin{"#f7a9a3", "#b71c1c", "#5c0000"};
  Palette inactive{"#f3f3f3", "#b3b3b3", "#8c8c8c"};
  std::string edge = "#7a7a7a";
  // Repeated-reference accent colors, indexed by ref group.
  std::vector<std::string> accents{"#1e88e5", "#43a047", "#fb8c00", "#8e24aa", "#00897b",
                                   "#6d4c41"};
  double dimmed_opacity = 0.5;
};

// Standalone SVG 1.1. Byte-deterministic; viewBox equals the scene bounds.
[[nodiscard]] std::string ToSvg(const SceneGraph& g, const Theme& theme = {});

class SceneFormatError : public std::runtime_error {
 public:
  // `where` is a byte offset ("at byte 17") or a JSON pointer ("/nodes/2/x").
  SceneFormatError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  [[nodiscard]] const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// {"nodes":[{"id","kind","shape","label","value","x","y","w","h","style",
//   "dimmed","refGroup"}],"edges":[{"from","to","points":[[x,y],...]}],
//  "bounds":{"w","h"}}
[[nodiscard]] std::string ToJson(const SceneGraph& g);
// Throws SceneFormatError on malformed JSON or schema violations.
[[nodiscard]] SceneGraph FromJson(std::string_view text);

}  // namespace equus

#endif  // EQUUS_RENDER_H
