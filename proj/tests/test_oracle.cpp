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

#include <algorithm>
#include <cmath>

#include "quadpara/oracle.hpp"
#include "quadpara/polygen.hpp"

namespace quadpara::oracle {
namespace {

const double kSqrt3 = std::sqrt(3.0);

ConvexPolygon unit_square() { return make_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
ConvexPolygon right_triangle() { return make_convex_polygon({{0, 0}, {1, 0}, {0, 1}}); }
ConvexPolygon hexagon() { return regular_ngon(6, 1.0); }

TEST(LongestChord, Examples) {
  EXPECT_EQ(longest_chord(unit_square(), Direction(1, 0)).length(), 1.0);
  const Segment s = longest_chord(right_triangle(), Direction(1, 1));
  EXPECT_NEAR(s.length(), std::sqrt(2.0) / 2, 1e-15);
  EXPECT_NEAR(std::min(norm(s.from), norm(s.to)), 0.0, 1e-15);
  EXPECT_NEAR(longest_chord(hexagon(), Direction(1, 0)).length(), 2.0, 1e-15);
}

TEST(BruteAnchoredQuadArea, Examples) {
  EXPECT_EQ(brute_anchored_quad_area(unit_square(), Direction(1, 0)), 0.5);
  EXPECT_EQ(brute_anchored_quad_area(right_triangle(), Direction(1, 0)), 0.5);
  EXPECT_NEAR(brute_anchored_quad_area(hexagon(), Direction(1, 0)), kSqrt3, 1e-12);
}

TEST(BruteAnchoredQuadArea, DirectionSignAndScale) {
  const ConvexPolygon p = random_convex(25, 8, 1000);
  const double base = brute_anchored_quad_area(p, Direction(3, 2));
  EXPECT_EQ(brute_anchored_quad_area(p, Direction(-3, -2)), base);
  EXPECT_NEAR(brute_anchored_quad_area(p, Direction(6, 4)), base, 1e-12 * base);
}

TEST(BruteLargestQuad, Examples) {
  const OracleQuad sq = brute_largest_quad(unit_square());
  EXPECT_EQ(sq.area, 1.0);
  EXPECT_EQ(sq.vertex_indices, (std::array<std::size_t, 4>{0, 1, 2, 3}));
  EXPECT_NEAR(brute_largest_quad(hexagon()).area, kSqrt3, 1e-12);
  EXPECT_EQ(brute_largest_quad(right_triangle()).area, 0.5);
}

TEST(BruteSmallestPara, Examples) {
  EXPECT_EQ(brute_smallest_para(unit_square()).area, 1.0);
  EXPECT_EQ(brute_smallest_para(right_triangle()).area, 1.0);
  EXPECT_NEAR(brute_smallest_para(hexagon()).area, 2 * kSqrt3, 1e-12);
}

TEST(IsAntipodalBrute, Examples) {
  EXPECT_TRUE(is_antipodal_brute(unit_square(), 0, 2));
  EXPECT_TRUE(is_antipodal_brute(unit_square(), 0, 1));
  EXPECT_FALSE(is_antipodal_brute(regular_ngon(5, 1.0), 0, 1));
  EXPECT_TRUE(is_antipodal_brute(regular_ngon(5, 1.0), 0, 2));
}

TEST(OracleProperties, OnCorpus) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ConvexPolygon p = random_convex(3 + seed % 30, seed, 1000);
    const OracleQuad q = brute_largest_quad(p);
    const auto v = p.vertices();
    EXPECT_EQ(q.area, quad_area(v[q.vertex_indices[0]], v[q.vertex_indices[1]],
                                v[q.vertex_indices[2]], v[q.vertex_indices[3]]));
    EXPECT_TRUE(std::is_sorted(q.vertex_indices.begin(), q.vertex_indices.end()));
    if (p.size() <= 4) {
      EXPECT_EQ(q.area, polygon_area(p));
    } else {
      EXPECT_LT(q.area, polygon_area(p));
    }

    double min_anchor = INFINITY;
    for (std::ptrdiff_t e = 0; e < static_cast<std::ptrdiff_t>(p.size()); ++e) {
      min_anchor = std::min(min_anchor, brute_anchored_quad_area(p, Direction(p.edge(e))));
    }
    EXPECT_EQ(brute_smallest_para(p).area, 2 * min_anchor);

    for (int k = 0; k < 16; ++k) {
      const Direction u(std::cos(0.2 * k), std::sin(0.2 * k));
      EXPECT_LE(brute_anchored_quad_area(p, u), q.area * (1 + 1e-12));
    }
  }
}

TEST(SampledExtremes, AgreeWithExhaustiveOracles) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ConvexPolygon p = random_convex(12, 40 + seed, 1000);
    const SampledExtremes s = sampled_extremes(p, 10000);
    const double quad = brute_largest_quad(p).area;
    const double para = brute_smallest_para(p).area;
    EXPECT_LE(s.max_quad, quad * (1 + 1e-12));
    EXPECT_GE(s.max_quad, quad * (1 - 1e-3));
    EXPECT_GE(s.min_para, para * (1 - 1e-12));
    EXPECT_LE(s.min_para, para * (1 + 1e-3));
  }
}

}  // namespace
}  // namespace quadpara::oracle
