// Copyright 2026 The quadpara Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>

#include "quadpara/io.hpp"
#include "quadpara/polygen.hpp"

namespace quadpara::io {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(ParseText, CommentsBlankLinesAndNumbers) {
  std::istringstream in("# square\n\n0 0\n1.5 0  # trailing comment\n 1.5\t2e0\n-0 +2\n");
  const auto pts = parse_polygon_text(in);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[1], (Point{1.5, 0}));
  EXPECT_EQ(pts[2], (Point{1.5, 2}));
  EXPECT_EQ(pts[3], (Point{0, 2}));
}

TEST(ParseText, ErrorsCarryLineNumbers) {
  std::istringstream bad("0 0\n1 0\n# ok\n1 x\n");
  try {
    parse_polygon_text(bad);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  std::istringstream one("0 0\n7\n");
  EXPECT_THROW(parse_polygon_text(one), ParseError);
  std::istringstream extra("0 0 0\n");
  EXPECT_THROW(parse_polygon_text(extra), ParseError);
}

TEST(ParseJson, VerticesArray) {
  const auto pts = parse_polygon_json(R"({"vertices": [[0, 0], [1, 0], [0.5, 2]]})");
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[2], (Point{0.5, 2}));
  EXPECT_THROW(parse_polygon_json(R"({"vertices": [[0, 0], [1]]})"), ParseError);
  EXPECT_THROW(parse_polygon_json(R"({"points": []})"), ParseError);
  EXPECT_THROW(parse_polygon_json("{"), ParseError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(1e21), "1e+21");
  XorShift64Star rng(5);
  for (int k = 0; k < 1000; ++k) {
    const double v = static_cast<double>(rng.uniform(-1000000, 1000000)) / 7.0;
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
}

TEST(Dump, SortedKeysAndStable) {
  nlohmann::json doc = {{"zeta", 1}, {"alpha", {{"b", 0.1}, {"a", {1.0, 2.5}}}}, {"mid", nullptr}};
  const std::string text = dump(doc);
  EXPECT_LT(text.find("\"alpha\""), text.find("\"mid\""));
  EXPECT_LT(text.find("\"mid\""), text.find("\"zeta\""));
  EXPECT_LT(text.find("\"a\""), text.find("\"b\""));
  EXPECT_NE(text.find("[1, 2.5]"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(text), doc);
  EXPECT_EQ(dump(doc), text);
}

TEST(Report, QuadJsonHasNullForSlidCorner) {
  QuadResult q;
  q.corners = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0.5, 1}};
  q.vertex_indices = {0, 1, 2, std::nullopt};
  q.area = 0.75;
  const nlohmann::json j = to_json(q);
  EXPECT_TRUE(j["vertex_indices"][3].is_null());
  EXPECT_EQ(j["area"].get<double>(), 0.75);
}

TEST(Svg, SquareHasThreeQuadrilateralPaths) {
  const ConvexPolygon sq = make_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const std::string svg = render_svg(sq, combined_extremes(sq));
  EXPECT_EQ(count(svg, "<path"), 3u);
  EXPECT_EQ(count(svg, " L "), 9u);  // three closed 4-point paths
  EXPECT_EQ(count(svg, "stroke-dasharray"), 1u);
  EXPECT_EQ(count(svg, "marker-end"), 2u);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Svg, Deterministic) {
  const ConvexPolygon p = random_convex(30, 12, 1000);
  EXPECT_EQ(render_svg(p, combined_extremes(p)), render_svg(p, combined_extremes(p)));
}

TEST(Svg, ViewBoxHasFivePercentMargin) {
  const ConvexPolygon sq = make_convex_polygon({{0, 0}, {20, 0}, {20, 20}, {0, 20}});
  const std::string svg = render_svg(sq, combined_extremes(sq));
  EXPECT_NE(svg.find("viewBox=\"-1 -21 22 22\""), std::string::npos) << svg;
}

TEST(Svg, HexagonTouchVerticesLieOnSides) {
  const ConvexPolygon hex = regular_ngon(6, 1.0);
  const ExtremesReport r = combined_extremes(hex);
  const auto& g = r.min_para.corners;
  for (std::size_t k = 0; k < 4; ++k) {
    const Point v = hex[static_cast<std::ptrdiff_t>(r.min_para.touch_indices[k])];
    EXPECT_LE(distance_to_segment(v, g[k], g[(k + 1) % 4]), 1e-9) << k;
  }
}

}  // namespace
}  // namespace quadpara::io
