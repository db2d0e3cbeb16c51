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

#include "quadpara/geom.hpp"

#include <algorithm>
#include <limits>

namespace quadpara {

Direction::Direction(Vec v) : v_(v) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || (v.x == 0.0 && v.y == 0.0)) {
    throw GeometryError(ErrorCode::kZeroDirection, "direction must be a finite nonzero vector");
  }
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kNotConvex: return "NotConvex";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kParallelLines: return "ParallelLines";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kSweepOverrun: return "SweepOverrun";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
  }
  return "Unknown";
}

double ConvexPolygon::scale() const {
  double s = 0.0;
  for (const Point& p : vertices_) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

double triangle_area_signed(Point p, Point q, Point r) { return 0.5 * det(q - p, r - p); }

double quad_area(Point a, Point b, Point c, Point d) { return 0.5 * std::abs(det(c - a, d - b)); }

double polygon_area(const ConvexPolygon& poly) {
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  double twice = 0.0;
  for (std::ptrdiff_t i = 1; i + 1 < n; ++i) twice += det(poly[i] - poly[0], poly[i + 1] - poly[0]);
  return 0.5 * twice;
}

namespace {

double shoelace(std::span<const Point> pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % pts.size()];
    twice += det(p, q);
  }
  return 0.5 * twice;
}

bool upper_half(Vec v) { return v.y > 0.0 || (v.y == 0.0 && v.x > 0.0); }

}  // namespace

ConvexPolygon make_convex_polygon(std::vector<Point> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw GeometryError(ErrorCode::kTooFewVertices,
                        "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw GeometryError(ErrorCode::kNonFinite, "vertex coordinates must be finite");
    }
  }
  if (shoelace(points) < 0.0) std::reverse(points.begin(), points.end());

  bool collinear = false;
  int revolutions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e0 = points[(i + 1) % n] - points[i];
    const Vec e1 = points[(i + 2) % n] - points[(i + 1) % n];
    const double turn = det(e0, e1);
    if (turn < 0.0) {
      throw GeometryError(ErrorCode::kNotConvex,
                          "clockwise turn at vertex " + std::to_string((i + 1) % n));
    }
    if (turn == 0.0) collinear = true;
    if (!upper_half(e0) && upper_half(e1)) ++revolutions;
  }
  if (collinear) {
    throw GeometryError(ErrorCode::kDegenerate,
                        "collinear or duplicate consecutive vertices; canonicalize first");
  }
  if (revolutions != 1) {
    throw GeometryError(ErrorCode::kNotConvex, "vertex ring winds more than once");
  }
  return ConvexPolygon(std::move(points));
}

std::vector<Point> canonicalize(std::span<const Point> points) {
  std::vector<Point> ring(points.begin(), points.end());
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    std::vector<Point> next;
    next.reserve(ring.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (ring[i] == ring[(i + 1) % ring.size()]) continue;
      next.push_back(ring[i]);
    }
    if (next.size() != ring.size()) changed = true;
    ring = std::move(next);
    if (ring.size() < 3) break;

    next.clear();
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = ring[(i + n - 1) % n];
      const Point& cur = ring[i];
      const Point& succ = ring[(i + 1) % n];
      if (det(cur - prev, succ - cur) != 0.0) next.push_back(cur);
    }
    if (next.size() != ring.size()) changed = true;
    ring = std::move(next);
  }
  if (ring.size() < 3) {
    throw GeometryError(ErrorCode::kDegenerate, "fewer than 3 extreme points");
  }
  return ring;
}

std::size_t extreme_vertex(const ConvexPolygon& poly, Vec d) {
  const std::size_t n = poly.size();
  const auto verts = poly.vertices();
  double best = -std::numeric_limits<double>::infinity();
  for (const Point& p : verts) best = std::max(best, dot(p, d));
  // At most two maximizers, and they are adjacent; take the one whose
  // predecessor also attains the maximum, else the unique one.
  std::size_t pick = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (dot(verts[i], d) != best) continue;
    if (pick == n) pick = i;
    if (dot(verts[(i + n - 1) % n], d) == best) return i;
  }
  return pick;
}

double width(const ConvexPolygon& poly, const Direction& u) {
  const Vec normal = perp(u.vec());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point& p : poly.vertices()) {
    const double s = dot(p, normal);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return (hi - lo) / norm(normal);
}

Segment chord_through(const ConvexPolygon& poly, Point q, const Direction& u) {
  const Vec dir = u.vec();
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    // Inside of edge i: det(e, x - p_i) >= 0 with x = q + t dir.
    const Vec e = poly.edge(i);
    const double offset = det(e, q - poly[i]);
    const double rate = det(e, dir);
    if (rate > 0.0) {
      t_lo = std::max(t_lo, -offset / rate);
    } else if (rate < 0.0) {
      t_hi = std::min(t_hi, -offset / rate);
    }
  }
  if (t_lo > t_hi) t_lo = t_hi = 0.0;  // q slightly outside; collapse to q
  return {q + t_lo * dir, q + t_hi * dir};
}

Point line_intersection(const Line& l1, const Line& l2) {
  const Vec d1 = l1.dir.vec();
  const Vec d2 = l2.dir.vec();
  const double denom = det(d1, d2);
  if (denom == 0.0) throw GeometryError(ErrorCode::kParallelLines, "lines are parallel");
  const double s = det(l2.base - l1.base, d2) / denom;
  return l1.base + s * d1;
}

bool contains_point(const ConvexPolygon& poly, Point x, double tol) {
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Vec e = poly.edge(i);
    if (det(e, x - poly[i]) / norm(e) < -tol) return false;
  }
  return true;
}

bool in_closed_cone(Vec start, Vec end, Vec u) {
  return det(start, u) >= 0.0 && det(u, end) >= 0.0 && (dot(start, u) > 0.0 || dot(end, u) > 0.0);
}

double distance_to_segment(Point x, Point a, Point b) {
  const Vec ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(x - a);
  const double t = std::clamp(dot(x - a, ab) / len2, 0.0, 1.0);
  return norm(x - (a + t * ab));
}

}  // namespace quadpara
