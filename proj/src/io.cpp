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

#include "quadpara/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

namespace quadpara::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_number(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool ends_with_json(const std::string& path) {
  constexpr std::string_view ext = ".json";
  return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

void dump_into(const json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {  // std::map keeps keys sorted
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        dump_into(item, indent + 2, out);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
      return;
    }
    case json::value_t::array: {
      // Short numeric arrays (points, index lists) stay on one line.
      const bool flat = std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); });
      if (v.empty() || flat) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i > 0) out += ", ";
          dump_into(v[i], indent, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += pad;
        dump_into(v[i], indent + 2, out);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

std::vector<Point> parse_polygon_text(std::istream& in) {
  std::vector<Point> pts;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected \"x y\"");
    }
    const std::string_view xs = line.substr(0, gap);
    const std::string_view ys = trim(line.substr(gap));
    Point p;
    if (!parse_number(xs, p.x) || !parse_number(ys, p.y)) {
      throw ParseError(line_no, "line " + std::to_string(line_no) + ": cannot parse \"" +
                                    std::string(line) + "\" as two numbers");
    }
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point> parse_polygon_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(0, "expected an object with a \"vertices\" array");
  }
  std::vector<Point> pts;
  std::size_t k = 0;
  for (const json& v : doc["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ParseError(0, "vertex " + std::to_string(k) + " is not a pair of numbers");
    }
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
    ++k;
  }
  return pts;
}

ConvexPolygon load_polygon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  if (ends_with_json(path)) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return make_convex_polygon(parse_polygon_json(buf.str()));
  }
  return make_convex_polygon(parse_polygon_text(in));
}

std::string format_double(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_polygon_text(const ConvexPolygon& poly, const std::vector<std::string>& header) {
  std::string out;
  for (const std::string& h : header) out += "# " + h + "\n";
  for (const Point& p : poly.vertices()) out += format_double(p.x) + " " + format_double(p.y) + "\n";
  return out;
}

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const QuadResult& quad) {
  json corners = json::array();
  json indices = json::array();
  for (std::size_t k = 0; k < 4; ++k) {
    corners.push_back(to_json(quad.corners[k]));
    indices.push_back(quad.vertex_indices[k] ? json(*quad.vertex_indices[k]) : json(nullptr));
  }
  return {{"area", quad.area}, {"corners", corners}, {"vertex_indices", indices}};
}

json to_json(const ParaResult& para) {
  json corners = json::array();
  for (const Point& p : para.corners) corners.push_back(to_json(p));
  return {{"area", para.area},
          {"corners", corners},
          {"side_dir_ac", to_json(para.side_dir_ac.vec())},
          {"side_dir_bd", to_json(para.side_dir_bd.vec())},
          {"touch_indices", para.touch_indices}};
}

json to_json(const ConjugateCertificate& cert) {
  const CertificateChecks& c = cert.checks;
  json checks = {{"anchored_diagonal", c.anchored_diagonal},
                 {"anchored_sides", c.anchored_sides},
                 {"corner_on_side", c.corner_on_side},
                 {"quad_in_polygon", c.quad_in_polygon},
                 {"polygon_in_para", c.polygon_in_para},
                 {"area_ratio", c.area_ratio}};
  return {{"anchor", to_json(cert.anchor.vec())},
          {"checks", checks},
          {"para", to_json(cert.para)},
          {"quad", to_json(cert.quad)},
          {"valid", cert.valid()}};
}

std::string dump(const json& value) {
  std::string out;
  dump_into(value, 0, out);
  out += "\n";
  return out;
}

namespace {

struct Box {
  double x0, y0, x1, y1;
};

std::string svg_path(const std::vector<Point>& pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i == 0 ? "M " : " L ") + format_double(pts[i].x) + " " + format_double(-pts[i].y);
  }
  return d + " Z";
}

}  // namespace

std::string render_svg(const ConvexPolygon& poly, const ExtremesReport& report) {
  const auto& g = report.min_para.corners;
  Box box{g[0].x, g[0].y, g[0].x, g[0].y};
  for (const Point& p : g) {
    box.x0 = std::min(box.x0, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.x1 = std::max(box.x1, p.x);
    box.y1 = std::max(box.y1, p.y);
  }
  const double margin = 0.05 * std::max(box.x1 - box.x0, box.y1 - box.y0);
  const double vx = box.x0 - margin;
  const double vy = -box.y1 - margin;  // flipped so y points up
  const double vw = box.x1 - box.x0 + 2 * margin;
  const double vh = box.y1 - box.y0 + 2 * margin;
  const double stroke = 0.004 * std::max(vw, vh);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << format_double(vx)
      << " " << format_double(vy) << " " << format_double(vw) << " " << format_double(vh)
      << "\">\n"
      << "  <defs>\n"
      << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\">\n"
      << "      <polygon points=\"0,0 10,5 0,10\" fill=\"#444444\"/>\n"
      << "    </marker>\n"
      << "  </defs>\n";

  const std::string sw = format_double(stroke);
  out << "  <path id=\"P\" d=\"" << svg_path({poly.vertices().begin(), poly.vertices().end()})
      << "\" fill=\"#d8e4f0\" stroke=\"#5a7fa8\" stroke-width=\"" << sw << "\"/>\n";
  const auto& f = report.max_quad.corners;
  out << "  <path id=\"F\" d=\"" << svg_path({f.begin(), f.end()})
      << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << sw << "\"/>\n";
  out << "  <path id=\"G\" d=\"" << svg_path({g.begin(), g.end()})
      << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"" << sw << "\" stroke-dasharray=\""
      << format_double(4 * stroke) << " " << format_double(2 * stroke) << "\"/>\n";

  auto arrow = [&](const char* id, const ConjugateCertificate& cert) {
    const Point a = cert.quad.corners[0];
    const Point c = cert.quad.corners[2];
    out << "  <line id=\"" << id << "\" x1=\"" << format_double(a.x) << "\" y1=\""
        << format_double(-a.y) << "\" x2=\"" << format_double(c.x) << "\" y2=\""
        << format_double(-c.y) << "\" stroke=\"#444444\" stroke-width=\"" << sw
        << "\" marker-end=\"url(#arrow)\"/>\n";
  };
  arrow("anchor-quad", report.quad_certificate);
  arrow("anchor-para", report.para_certificate);
  out << "</svg>\n";
  return out.str();
}

}  // namespace quadpara::io
