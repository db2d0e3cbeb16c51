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

#include "quadpara/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace quadpara::oracle {

Segment longest_chord(const ConvexPolygon& poly, const Direction& u) {
  Segment best{poly[0], poly[0]};
  double best_len = -1.0;
  for (const Point& q : poly.vertices()) {
    const Segment s = chord_through(poly, q, u);
    const double len = s.length();
    if (len > best_len) {
      best_len = len;
      best = s;
    }
  }
  return best;
}

double brute_anchored_quad_area(const ConvexPolygon& poly, const Direction& u) {
  return 0.5 * longest_chord(poly, u).length() * width(poly, u);
}

OracleQuad brute_largest_quad(const ConvexPolygon& poly) {
  const std::size_t n = poly.size();
  const auto v = poly.vertices();
  OracleQuad best;
  best.area = -1.0;
  auto consider = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const double area = quad_area(v[i], v[j], v[k], v[l]);
    if (area > best.area) best = {{i, j, k, l}, area};
  };
  if (n == 3) {
    // Nondecreasing tuples: corners may coincide.
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j)
        for (std::size_t k = j; k < 3; ++k)
          for (std::size_t l = k; l < 3; ++l) consider(i, j, k, l);
    return best;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) consider(i, j, k, l);
  return best;
}

OraclePara brute_smallest_para(const ConvexPolygon& poly) {
  OraclePara best{0, std::numeric_limits<double>::infinity()};
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  for (std::ptrdiff_t e = 0; e < n; ++e) {
    const Direction u(poly.edge(e));
    const double area = longest_chord(poly, u).length() * width(poly, u);
    if (area < best.area) best = {static_cast<std::size_t>(e), area};
  }
  return best;
}

namespace {

// Outward normal of edge i of a counterclockwise polygon.
Vec outward_normal(const ConvexPolygon& poly, std::ptrdiff_t i) {
  const Vec e = poly.edge(i);
  return {e.y, -e.x};
}

bool cones_intersect(Vec s1, Vec e1, Vec s2, Vec e2) {
  return in_closed_cone(s1, e1, s2) || in_closed_cone(s1, e1, e2) ||
         in_closed_cone(s2, e2, s1) || in_closed_cone(s2, e2, e1);
}

}  // namespace

bool is_antipodal_brute(const ConvexPolygon& poly, std::size_t i, std::size_t j) {
  const auto ii = static_cast<std::ptrdiff_t>(i);
  const auto jj = static_cast<std::ptrdiff_t>(j);
  // Normal cone of p_i: from the normal of the incoming edge to that of the
  // outgoing edge. p_j must be extreme for the negated direction.
  const Vec si = outward_normal(poly, ii - 1);
  const Vec ei = outward_normal(poly, ii);
  const Vec sj = -outward_normal(poly, jj - 1);
  const Vec ej = -outward_normal(poly, jj);
  return cones_intersect(si, ei, sj, ej);
}

SampledExtremes sampled_extremes(const ConvexPolygon& poly, std::size_t samples) {
  SampledExtremes out{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t k = 0; k < samples; ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    const Direction u(std::cos(theta), std::sin(theta));
    const double quad = brute_anchored_quad_area(poly, u);
    out.max_quad = std::max(out.max_quad, quad);
    out.min_para = std::min(out.min_para, 2.0 * quad);
  }
  return out;
}

}  // namespace quadpara::oracle
