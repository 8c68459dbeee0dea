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
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "equus/render.h"

namespace equus {

namespace {

std::string Num(double v) {
  if (std::fabs(v) < 0.005) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default:
        // Control characters are not allowed in XML 1.0 text.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n' && c != '\r') {
          out += "\xEF\xBF\xBD";
        } else {
          out += c;
        }
    }
  }
  return out;
}

const Palette& PaletteFor(const SceneNode& n, const Theme& t) {
  switch (n.style) {
    case StyleClass::kErrorOrigin: return t.error_origin;
    case StyleClass::kError: return t.error;
    case StyleClass::kInactiveBranch: return t.inactive;
    case StyleClass::kNormal: break;
  }
  return n.kind == NodeKind::kResult ? t.result : t.normal;
}

void WriteShape(const SceneNode& n, const Palette& p, const std::string& stroke,
                double stroke_width, std::ostream& out) {
  const std::string paint = " fill=\"" + p.fill + "\" stroke=\"" + stroke +
                            "\" stroke-width=\"" + Num(stroke_width) + "\"";
  switch (n.shape) {
    case Shape::kCircle:
      out << "<circle cx=\"" << Num(n.x + n.w / 2) << "\" cy=\"" << Num(n.y + n.h / 2)
          << "\" r=\"" << Num(std::min(n.w, n.h) / 2) << "\"" << paint << "/>";
      break;
    case Shape::kTag: {
      const double notch = std::min(10.0, n.w / 4);
      const double mid = n.y + n.h / 2;
      out << "<polygon points=\"" << Num(n.x + notch) << "," << Num(n.y) << " "
          << Num(n.x + n.w) << "," << Num(n.y) << " " << Num(n.x + n.w) << ","
          << Num(n.y + n.h) << " " << Num(n.x + notch) << "," << Num(n.y + n.h) << " "
          << Num(n.x) << "," << Num(mid) << "\"" << paint << "/>";
      break;
    }
    case Shape::kRoundedRect:
    case Shape::kRect:
    case Shape::kCapsule: {
      double radius = 0;
      if (n.shape == Shape::kRoundedRect) radius = 6;
      if (n.shape == Shape::kCapsule) radius = n.h / 2;
      out << "<rect x=\"" << Num(n.x) << "\" y=\"" << Num(n.y) << "\" width=\"" << Num(n.w)
          << "\" height=\"" << Num(n.h) << "\"";
      if (radius > 0) out << " rx=\"" << Num(radius) << "\"";
      out << paint << "/>";
      break;
    }
  }
}

void WriteText(double x, double y, const std::string& cls, const std::string& color,
               std::string_view text, std::ostream& out) {
  out << "<text class=\"" << cls << "\" x=\"" << Num(x) << "\" y=\"" << Num(y)
      << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"" << color << "\">"
      << Escape(text) << "</text>";
}

}  // namespace

std::string ToSvg(const SceneGraph& g, const Theme& theme) {
  std::map<int, int> group_sizes;
  for (const SceneNode& n : g.nodes) {
    if (n.ref_group) ++group_sizes[*n.ref_group];
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << Num(g.width)
      << "\" height=\"" << Num(g.height) << "\" viewBox=\"0 0 " << Num(g.width) << " "
      << Num(g.height) << "\" font-family=\"" << Escape(theme.font_family)
      << "\" font-size=\"" << Num(theme.font_size) << "\">\n";

  for (const SceneEdge& e : g.edges) {
    out << "<path class=\"edge\" data-from=\"" << Escape(e.from) << "\" data-to=\""
        << Escape(e.to) << "\" d=\"";
    for (size_t i = 0; i < e.points.size(); ++i) {
      out << (i == 0 ? "M" : " L") << Num(e.points[i].x) << " " << Num(e.points[i].y);
    }
    out << "\" fill=\"none\" stroke=\"" << theme.edge << "\" stroke-width=\"1.5\"/>\n";
  }

  for (const SceneNode& n : g.nodes) {
    const Palette& p = PaletteFor(n, theme);
    const bool accented =
        n.ref_group && group_sizes[*n.ref_group] > 1 && !theme.accents.empty();
    const std::string accent =
        accented ? theme.accents[static_cast<size_t>(*n.ref_group) % theme.accents.size()] : "";

    out << "<g class=\"node " << ToString(n.kind) << " " << ToString(n.style) << "\" id=\"node-"
        << Escape(n.id) << "\"";
    if (n.ref_group) out << " data-ref-group=\"" << *n.ref_group << "\"";
    if (n.dimmed) out << " opacity=\"" << Num(theme.dimmed_opacity) << "\"";
    out << ">";
    out << "<title>" << Escape(n.label) << " = " << Escape(n.value) << "</title>";
    const double width = n.style == StyleClass::kErrorOrigin || accented ? 2.5 : 1.2;
    WriteShape(n, p, accented ? accent : p.stroke, width, out);
    const double cx = n.x + n.w / 2;
    const double cy = n.y + n.h / 2;
    if (n.kind == NodeKind::kLiteral) {
      WriteText(cx, cy, "value", p.text, n.value, out);
    } else {
      WriteText(cx, cy - n.h / 4, "label", p.text, n.label, out);
      WriteText(cx, cy + n.h / 4, "value", p.text, n.value, out);
    }
    if (accented) {
      out << "<circle class=\"accent\" cx=\"" << Num(n.x + n.w - 5) << "\" cy=\""
          << Num(n.y + 5) << "\" r=\"3.5\" fill=\"" << accent << "\"/>";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace equus
