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

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadpara {

/// Planar point or free vector in binary64.
///
/// All predicates in this library branch on the exact sign of 2x2
/// determinants. For integer coordinates with |x|, |y| <= 2^20 every
/// determinant of coordinate differences is exactly representable, so
/// tie decisions (parallel edges, collinear corners) are exact.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

using Vec = Point;

/// x1*y2 - x2*y1. Positive iff `v` lies counterclockwise from `u`.
constexpr double det(Vec u, Vec v) { return u.x * v.y - v.x * u.y; }
constexpr double dot(Vec u, Vec v) { return u.x * v.x + u.y * v.y; }
inline double norm(Vec u) { return std::hypot(u.x, u.y); }
/// Counterclockwise quarter turn.
constexpr Vec perp(Vec u) { return {-u.y, u.x}; }

/// An undirected direction: `Direction(v) == Direction(-v)` and
/// `Direction(v) == Direction(2 * v)`.
class Direction {
 public:
  Direction() = default;
  /// Throws GeometryError(kZeroDirection) for (0, 0) or non-finite input.
  explicit Direction(Vec v);
  Direction(double dx, double dy) : Direction(Vec{dx, dy}) {}

  double dx() const { return v_.x; }
  double dy() const { return v_.y; }
  Vec vec() const { return v_; }
  Direction reversed() const { return Direction(-v_); }

  friend bool operator==(const Direction& a, const Direction& b) {
    return det(a.v_, b.v_) == 0.0;
  }

 private:
  Vec v_{1.0, 0.0};
};

enum class ErrorCode {
  kTooFewVertices,
  kNotConvex,
  kDegenerate,
  kNonFinite,
  kParallelLines,
  kZeroDirection,
  kSweepOverrun,
  kDegenerateSample,
};

const char* to_string(ErrorCode code);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Segment {
  Point from;
  Point to;
  double length() const { return norm(to - from); }
};

struct Line {
  Point base;
  Direction dir;
};

/// Strictly convex polygon with counterclockwise vertices. Indices wrap
/// modulo n everywhere. Only obtainable through make_convex_polygon.
class ConvexPolygon {
 public:
  std::size_t size() const { return vertices_.size(); }
  std::span<const Point> vertices() const { return vertices_; }

  /// Vertex i modulo n; negative i is allowed.
  const Point& operator[](std::ptrdiff_t i) const { return vertices_[wrap(i)]; }
  std::size_t wrap(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return static_cast<std::size_t>(((i % n) + n) % n);
  }
  /// Edge vector p_{i+1} - p_i.
  Vec edge(std::ptrdiff_t i) const { return (*this)[i + 1] - (*this)[i]; }

  /// Max absolute coordinate; the unit for relative tolerances.
  double scale() const;

 private:
  friend ConvexPolygon make_convex_polygon(std::vector<Point> points);
  explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}

  std::vector<Point> vertices_;
};

/// ½ det(q - p, r - p); positive iff (p, q, r) is counterclockwise.
double triangle_area_signed(Point p, Point q, Point r);

/// ½ |det(C - A, D - B)| for a (possibly degenerate) convex quadrilateral.
double quad_area(Point a, Point b, Point c, Point d);

double polygon_area(const ConvexPolygon& poly);

/// Validates a strictly convex ring given in either orientation and returns
/// it counterclockwise. Throws GeometryError with kTooFewVertices,
/// kNonFinite, kDegenerate (duplicate or collinear consecutive vertices)
/// or kNotConvex.
ConvexPolygon make_convex_polygon(std::vector<Point> points);

/// Drops duplicate points and vertices in the interior of an edge from a
/// weakly convex ring. Throws kDegenerate if fewer than 3 vertices remain.
std::vector<Point> canonicalize(std::span<const Point> points);

/// Index maximizing dot(p_i, d). Of two maximizers (an edge normal to d)
/// the later one in counterclockwise order is returned.
std::size_t extreme_vertex(const ConvexPolygon& poly, Vec d);

/// Distance between the two supporting lines parallel to `u`.
double width(const ConvexPolygon& poly, const Direction& u);

/// Intersection of the line {q + t u} with the polygon; `q` must lie in the
/// polygon. Degenerates to a single point for a tangent line.
Segment chord_through(const ConvexPolygon& poly, Point q, const Direction& u);

/// Throws GeometryError(kParallelLines) when the directions are parallel.
Point line_intersection(const Line& l1, const Line& l2);

/// True iff `x` is inside or within distance `tol` of every edge line.
bool contains_point(const ConvexPolygon& poly, Point x, double tol);

/// True iff `u` lies in the closed counterclockwise cone from `start` to
/// `end`, whose span must be below a half-turn.
bool in_closed_cone(Vec start, Vec end, Vec u);

/// Distance from `x` to the closed segment ab.
double distance_to_segment(Point x, Point a, Point b);

}  // namespace quadpara
