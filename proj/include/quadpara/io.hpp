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

// Polygon files, JSON reports and SVG figures.
//
// Text format: one vertex per line as "x y"; '#' starts a comment; blank
// lines are ignored. Files ending in ".json" instead hold
// {"vertices": [[x, y], ...]}. Either orientation is accepted.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadpara/extremal.hpp"
#include "quadpara/geom.hpp"

namespace quadpara::io {

/// Malformed polygon file. line() is 1-based, or 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::vector<Point> parse_polygon_text(std::istream& in);
std::vector<Point> parse_polygon_json(const std::string& text);

/// Reads and validates a polygon; the format follows the file extension.
/// Throws ParseError, or GeometryError from make_convex_polygon.
ConvexPolygon load_polygon(const std::string& path);

/// Shortest decimal string that reads back to the same binary64.
std::string format_double(double v);

/// Text-format polygon, one "x y" line per vertex after `header` comments.
std::string format_polygon_text(const ConvexPolygon& poly, const std::vector<std::string>& header = {});

nlohmann::json to_json(Point p);
nlohmann::json to_json(const QuadResult& quad);
nlohmann::json to_json(const ParaResult& para);
nlohmann::json to_json(const ConjugateCertificate& cert);

/// Serializes with sorted keys, two-space indent and format_double for
/// every floating-point value. Output is byte-stable.
std::string dump(const nlohmann::json& value);

/// SVG 1.1 figure: P filled, F outlined, G dashed, and one arrow per
/// certificate along F's diagonal, which is parallel to the anchor
/// direction. y points up.
std::string render_svg(const ConvexPolygon& poly, const ExtremesReport& report);

}  // namespace quadpara::io
