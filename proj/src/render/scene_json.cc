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

#include <limits>
#include <set>

#include "equus/render.h"
#include "json.hpp"

namespace equus {

namespace {

using Json = nlohmann::ordered_json;

Json PointsToJson(const std::vector<Point>& points) {
  Json arr = Json::array();
  for (const Point& p : points) arr.push_back(Json::array({p.x, p.y}));
  return arr;
}

class Reader {
 public:
  explicit Reader(const Json& root) : root_(root) {}

  SceneGraph Read() {
    Expect(root_, "", Json::value_t::object, "an object");
    SceneGraph g;
    const Json& nodes = Field(root_, "", "nodes");
    Expect(nodes, "/nodes", Json::value_t::array, "an array");
    std::set<std::string> ids;
    for (size_t i = 0; i < nodes.size(); ++i) {
      SceneNode n = ReadNode(nodes[i], "/nodes/" + std::to_string(i));
      if (!ids.insert(n.id).second) {
        throw SceneFormatError("/nodes/" + std::to_string(i) + "/id", "duplicate id '" + n.id + "'");
      }
      g.nodes.push_back(std::move(n));
    }
    const Json& edges = Field(root_, "", "edges");
    Expect(edges, "/edges", Json::value_t::array, "an array");
    for (size_t i = 0; i < edges.size(); ++i) {
      g.edges.push_back(ReadEdge(edges[i], "/edges/" + std::to_string(i), ids));
    }
    const Json& bounds = Field(root_, "", "bounds");
    Expect(bounds, "/bounds", Json::value_t::object, "an object");
    g.width = Number(bounds, "/bounds", "w");
    g.height = Number(bounds, "/bounds", "h");
    return g;
  }

 private:
  static const Json& Field(const Json& obj, const std::string& at, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SceneFormatError(at + "/" + key, "missing field");
    return *it;
  }

  static void Expect(const Json& j, const std::string& at, Json::value_t type,
                     const char* what) {
    if (j.type() != type) throw SceneFormatError(at.empty() ? "/" : at, std::string("expected ") + what);
  }

  static std::string String(const Json& obj, const std::string& at, const char* key) {
    const Json& j = Field(obj, at, key);
    if (!j.is_string()) throw SceneFormatError(at + "/" + key, "expected a string");
    return j.get<std::string>();
  }

  static double NumberValue(const Json& j, const std::string& at) {
    if (!j.is_number()) throw SceneFormatError(at, "expected a number");
    return j.get<double>();
  }

  static double Number(const Json& obj, const std::string& at, const char* key) {
    return NumberValue(Field(obj, at, key), at + "/" + key);
  }

  template <typename T, typename F>
  static T Enum(const Json& obj, const std::string& at, const char* key, F from_string) {
    std::string s = String(obj, at, key);
    auto v = from_string(s);
    if (!v) throw SceneFormatError(at + "/" + key, "unknown value '" + s + "'");
    return *v;
  }

  static SceneNode ReadNode(const Json& j, const std::string& at) {
    Expect(j, at, Json::value_t::object, "an object");
    SceneNode n;
    n.id = String(j, at, "id");
    n.kind = Enum<NodeKind>(j, at, "kind", NodeKindFromString);
    n.shape = Enum<Shape>(j, at, "shape", ShapeFromString);
    n.label = String(j, at, "label");
    n.value = String(j, at, "value");
    n.x = Number(j, at, "x");
    n.y = Number(j, at, "y");
    n.w = Number(j, at, "w");
    n.h = Number(j, at, "h");
    n.style = Enum<StyleClass>(j, at, "style", StyleClassFromString);
    if (auto it = j.find("dimmed"); it != j.end()) {
      if (!it->is_boolean()) throw SceneFormatError(at + "/dimmed", "expected a boolean");
      n.dimmed = it->get<bool>();
    }
    if (auto it = j.find("refGroup"); it != j.end() && !it->is_null()) {
      if (!it->is_number_integer() || it->get<long long>() < 0 ||
          it->get<long long>() > std::numeric_limits<int>::max()) {
        throw SceneFormatError(at + "/refGroup", "expected a non-negative integer or null");
      }
      n.ref_group = it->get<int>();
    }
    return n;
  }

  static SceneEdge ReadEdge(const Json& j, const std::string& at,
                            const std::set<std::string>& ids) {
    Expect(j, at, Json::value_t::object, "an object");
    SceneEdge e;
    e.from = String(j, at, "from");
    if (!ids.count(e.from)) throw SceneFormatError(at + "/from", "unknown node '" + e.from + "'");
    e.to = String(j, at, "to");
    if (!ids.count(e.to)) throw SceneFormatError(at + "/to", "unknown node '" + e.to + "'");
    const Json& points = Field(j, at, "points");
    Expect(points, at + "/points", Json::value_t::array, "an array");
    for (size_t i = 0; i < points.size(); ++i) {
      const std::string p_at = at + "/points/" + std::to_string(i);
      const Json& p = points[i];
      if (!p.is_array() || p.size() != 2) throw SceneFormatError(p_at, "expected [x, y]");
      e.points.push_back({NumberValue(p[0], p_at + "/0"), NumberValue(p[1], p_at + "/1")});
    }
    return e;
  }

  const Json& root_;
};

}  // namespace

std::string ToJson(const SceneGraph& g) {
  Json nodes = Json::array();
  for (const SceneNode& n : g.nodes) {
    Json j;
    j["id"] = n.id;
    j["kind"] = ToString(n.kind);
    j["shape"] = ToString(n.shape);
    j["label"] = n.label;
    j["value"] = n.value;
    j["x"] = n.x;
    j["y"] = n.y;
    j["w"] = n.w;
    j["h"] = n.h;
    j["style"] = ToString(n.style);
    j["dimmed"] = n.dimmed;
    j["refGroup"] = n.ref_group ? Json(*n.ref_group) : Json(nullptr);
    nodes.push_back(std::move(j));
  }
  Json edges = Json::array();
  for (const SceneEdge& e : g.edges) {
    Json j;
    j["from"] = e.from;
    j["to"] = e.to;
    j["points"] = PointsToJson(e.points);
    edges.push_back(std::move(j));
  }
  Json root;
  root["nodes"] = std::move(nodes);
  root["edges"] = std::move(edges);
  root["bounds"] = Json{{"w", g.width}, {"h", g.height}};
  return root.dump();
}

SceneGraph FromJson(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SceneFormatError("at byte " + std::to_string(e.byte), "malformed JSON");
  }
  return Reader(root).Read();
}

}  // namespace equus
