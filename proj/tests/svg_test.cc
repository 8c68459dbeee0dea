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

#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <sstream>

#include "equus/parser.h"
#include "equus/render.h"
#include "support/generators.h"

namespace equus {
namespace {

namespace pt = boost::property_tree;

SceneGraph SceneFor(std::string_view f) { return Layout(Evaluate(Parse(f), EmptyContext())); }

// Parses with an independent XML reader; returns the <svg> element.
pt::ptree ParseXml(const std::string& svg) {
  std::istringstream in(svg);
  pt::ptree doc;
  pt::read_xml(in, doc);
  return doc.get_child("svg");
}

void CollectTexts(const pt::ptree& node, std::vector<std::string>& out) {
  for (const auto& [name, child] : node) {
    if (name == "text") out.push_back(child.get_value<std::string>());
    CollectTexts(child, out);
  }
}

size_t Count(const std::string& haystack, const std::string& needle) {
  size_t n = 0;
  for (size_t p = haystack.find(needle); p != std::string::npos; p = haystack.find(needle, p + 1)) {
    ++n;
  }
  return n;
}

TEST(SvgTest, FigureOneShowsEveryValue) {
  const std::string svg = ToSvg(SceneFor("=2+3*4"));
  const pt::ptree root = ParseXml(svg);
  std::vector<std::string> texts;
  CollectTexts(root, texts);
  for (const char* v : {"2", "3", "4", "12", "14", "+", "*", "="}) {
    EXPECT_NE(std::find(texts.begin(), texts.end(), v), texts.end()) << v;
  }
  EXPECT_EQ(Count(svg, "<g class=\"node"), 6u);
  EXPECT_EQ(Count(svg, "<path class=\"edge\""), 5u);
  EXPECT_EQ(Count(svg, "<circle"), 2u);
  EXPECT_NE(svg.find("id=\"node-r.1\""), std::string::npos);
}

TEST(SvgTest, ViewBoxMatchesBounds) {
  const SceneGraph g = SceneFor("=1+2");
  const pt::ptree root = ParseXml(ToSvg(g));
  const std::string vb = root.get<std::string>("<xmlattr>.viewBox");
  std::istringstream in(vb);
  double x, y, w, h;
  in >> x >> y >> w >> h;
  EXPECT_EQ(x, 0);
  EXPECT_EQ(y, 0);
  EXPECT_NEAR(w, g.width, 0.005);
  EXPECT_NEAR(h, g.height, 0.005);
}

TEST(SvgTest, ErrorPalette) {
  const Theme theme;
  const std::string svg = ToSvg(SceneFor("=TAN(1/0)+SIN(40/3)"), theme);
  EXPECT_EQ(Count(svg, "class=\"node operator error-origin\""), 1u);
  EXPECT_NE(svg.find("fill=\"" + theme.error_origin.fill + "\""), std::string::npos);
  EXPECT_NE(svg.find("fill=\"" + theme.error.fill + "\""), std::string::npos);
}

TEST(SvgTest, DimmedNodesAreTranslucent) {
  const std::string svg = ToSvg(SceneFor("=IF(TRUE,1,2)"));
  EXPECT_EQ(Count(svg, "opacity=\"0.5\""), 1u);
  EXPECT_NE(svg.find("inactive-branch"), std::string::npos);
}

TEST(SvgTest, RepeatedReferencesShareAnAccent) {
  const std::string svg = ToSvg(SceneFor("=(-B1+SQRT(B1^2-4*X1*C1))/(2*X1)+X1"));
  const Theme theme;
  EXPECT_EQ(Count(svg, "data-ref-group="), 6u);
  // X1 and B1 repeat; C1 does not.
  EXPECT_GE(Count(svg, theme.accents[0]), 2u);
  ParseXml(svg);
}

TEST(SvgTest, TextIsEscaped) {
  const std::string svg = ToSvg(SceneFor("=\"<a & 'b'>\"&\"\"\"\""));
  const pt::ptree root = ParseXml(svg);
  std::vector<std::string> texts;
  CollectTexts(root, texts);
  EXPECT_NE(std::find(texts.begin(), texts.end(), "<a & 'b'>\""), texts.end());
}

TEST(SvgTest, EmptyGraph) {
  const std::string svg = ToSvg(SceneGraph{});
  const pt::ptree root = ParseXml(svg);
  EXPECT_EQ(root.get<std::string>("<xmlattr>.width"), "0");
}

// Random scenes, including hostile labels, always serialize to well-formed
// XML, and serialization is byte-deterministic.
TEST(SvgPropertyTest, WellFormedAndDeterministic) {
  test::Rng rng(8080);
  for (int i = 0; i < 600; ++i) {
    const SceneGraph g = test::RandomScene(rng);
    const std::string svg = ToSvg(g);
    ASSERT_NO_THROW(ParseXml(svg)) << svg;
    ASSERT_EQ(svg, ToSvg(g));
    ASSERT_EQ(Count(svg, "<g class=\"node"), g.nodes.size());
  }
}

}  // namespace
}  // namespace equus
