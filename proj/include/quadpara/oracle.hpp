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

// Slow reference computations. None of these touch the sweep code; they
// exist to check it.

#pragma once

#include <array>
#include <cstddef>

#include "quadpara/geom.hpp"

namespace quadpara::oracle {

/// Size limits for the exhaustive searches.
inline constexpr std::size_t kQuadOracleMaxN = 40;
inline constexpr std::size_t kParaOracleMaxN = 200;

struct OracleQuad {
  std::array<std::size_t, 4> vertex_indices{};
  double area = 0.0;
};

struct OraclePara {
  std::size_t anchor_edge = 0;
  double area = 0.0;
};

/// Longest chord parallel to `u`, taken as the best of the chords through
/// every vertex. O(n^2).
Segment longest_chord(const ConvexPolygon& poly, const Direction& u);

/// ½ L(u) w(u): area of the largest quadrilateral whose diagonal is
/// parallel to `u`.
double brute_anchored_quad_area(const ConvexPolygon& poly, const Direction& u);

/// Best quadrilateral over all counterclockwise vertex 4-tuples (4-multisets
/// for triangles). Ties go to the lexicographically smallest tuple. O(n^4).
OracleQuad brute_largest_quad(const ConvexPolygon& poly);

/// min over edge directions u_e of L(u_e) w(u_e). Ties go to the smallest
/// edge index. O(n^2) per edge.
OraclePara brute_smallest_para(const ConvexPolygon& poly);

/// True iff some direction has p_i and p_j on opposite parallel supporting
/// lines, decided by intersecting the normal cone of p_i with the negated
/// normal cone of p_j.
bool is_antipodal_brute(const ConvexPolygon& poly, std::size_t i, std::size_t j);

/// Min/max of the anchored formulas over `samples` evenly spaced directions
/// in a half-turn.
struct SampledExtremes {
  double max_quad = 0.0;
  double min_para = 0.0;
};
SampledExtremes sampled_extremes(const ConvexPolygon& poly, std::size_t samples);

}  // namespace quadpara::oracle
