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

// Largest contained quadrilateral and smallest enclosing parallelogram.
//
// A quadrilateral F = ABCD is D-anchored to a direction u when its diagonal
// AC is parallel to u; a parallelogram G with sides a, b, c, d is
// S-anchored to u when sides b and d are parallel to u. (F, G) is a
// conjugate pair when both are anchored to u and every corner of F lies on
// the matching side of G. Then area(G) = 2 area(F), and if F ⊆ P ⊆ G both
// are optimal among the anchored candidates for u.

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "quadpara/calipers.hpp"
#include "quadpara/geom.hpp"

namespace quadpara {

/// Contained quadrilateral ABCD, counterclockwise. A corner that lies in the
/// interior of an edge has no vertex index.
struct QuadResult {
  std::array<Point, 4> corners{};
  std::array<std::optional<std::size_t>, 4> vertex_indices{};
  double area = 0.0;
};

/// Enclosing parallelogram with sides a, b, c, d. Corners are stored as
/// (d∩a, a∩b, b∩c, c∩d), counterclockwise. touch_indices[k] is a polygon
/// vertex on side k.
struct ParaResult {
  std::array<Point, 4> corners{};
  Direction side_dir_bd;
  Direction side_dir_ac;
  double area = 0.0;
  std::array<std::size_t, 4> touch_indices{};
};

struct CertificateChecks {
  bool anchored_diagonal = false;  // AC parallel to u
  bool anchored_sides = false;     // sides b, d parallel to u
  std::array<bool, 4> corner_on_side{};
  bool quad_in_polygon = false;
  bool polygon_in_para = false;
  bool area_ratio = false;  // area(G) == 2 area(F)

  bool all() const;
};

struct ConjugateCertificate {
  QuadResult quad;
  ParaResult para;
  Direction anchor;
  CertificateChecks checks;

  bool valid() const { return checks.all(); }
};

struct ExtremesReport {
  QuadResult max_quad;
  ParaResult min_para;
  ConjugateCertificate quad_certificate;
  ConjugateCertificate para_certificate;
  std::uint64_t predicate_count = 0;
};

struct AnchoredPair {
  QuadResult quad;
  ParaResult para;
};

/// Default relative tolerance for certificate checks: distances are
/// compared against tol * scale, areas against tol * scale^2.
inline constexpr double kDefaultTolerance = 1e-9;

/// Largest D-anchored contained quadrilateral and smallest S-anchored
/// enclosing parallelogram for `u`; they form a conjugate pair.
AnchoredPair anchored_conjugate_pair(const ConvexPolygon& poly, const Direction& u);

/// Checks every conjugacy condition plus F ⊆ P ⊆ G. Failures are recorded
/// in the returned checks, never thrown.
ConjugateCertificate verify_conjugate_pair(const QuadResult& quad, const ParaResult& para,
                                           const Direction& u, const ConvexPolygon& poly,
                                           double tol = kDefaultTolerance);

/// Single merged sweep computing both optima with certificates.
ExtremesReport combined_extremes(const ConvexPolygon& poly);

/// Sweep over antipodal vertex pairs from the vertical extremes; corners
/// are always polygon vertices.
QuadResult largest_quadrilateral(const ConvexPolygon& poly, PredicateCounter* counter = nullptr);

/// Full-turn sweep over edges flush with side b, with side c flush with the
/// edge holding the slid corner C.
ParaResult smallest_parallelogram(const ConvexPolygon& poly, PredicateCounter* counter = nullptr);

/// Intersection of the line through the edge with the line through
/// `opposite` parallel to `u_bd`; nullopt when those are parallel.
std::optional<Point> slide_corner(Point edge_from, Point edge_to, Point opposite, Vec u_bd);

/// Area of the quadrilateral with one corner slid along the edge so that
/// it is joined to `opposite` by a segment parallel to `u_bd`, evaluated
/// as a closed determinant ratio. nullopt when the edge is parallel to
/// `u_bd`.
std::optional<double> star_area(Point edge_from, Point edge_to, Point opposite, Point b, Point d,
                                Vec u_bd);

/// Parallelogram bounded by sides a, c (through `on_a`, `on_c`, parallel to
/// `dir_ac`) and b, d (through `on_b`, `on_d`, parallel to `dir_bd`).
/// Throws GeometryError(kParallelLines) if the directions are parallel.
std::array<Point, 4> parallelogram_corners(Point on_a, Point on_b, Point on_c, Point on_d,
                                           const Direction& dir_ac, const Direction& dir_bd);

}  // namespace quadpara
