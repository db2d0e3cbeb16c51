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
#include <set>
#include <vector>

#include "quadpara/extremal.hpp"
#include "quadpara/oracle.hpp"
#include "quadpara/polygen.hpp"

namespace quadpara {
namespace {

const double kSqrt3 = std::sqrt(3.0);

ConvexPolygon unit_square() { return make_convex_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
ConvexPolygon right_triangle() { return make_convex_polygon({{0, 0}, {1, 0}, {0, 1}}); }
ConvexPolygon hexagon() { return regular_ngon(6, 1.0); }

void expect_rel(double got, double want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << got << " vs " << want;
}

std::vector<ConvexPolygon> corpus() {
  std::vector<ConvexPolygon> out;
  for (std::uint64_t seed = 0; seed < 80; ++seed) out.push_back(random_convex(3 + seed % 38, seed, 1000));
  for (int m = 2; m <= 12; ++m) out.push_back(parallel_edge_polygon(m, 7 * m));
  return out;
}

TEST(AnchoredConjugatePair, Examples) {
  AnchoredPair p = anchored_conjugate_pair(unit_square(), Direction(1, 0));
  EXPECT_EQ(p.quad.area, 0.5);
  EXPECT_EQ(p.para.area, 1.0);

  p = anchored_conjugate_pair(right_triangle(), Direction(1, 0));
  EXPECT_EQ(p.quad.area, 0.5);
  EXPECT_EQ(p.para.area, 1.0);

  p = anchored_conjugate_pair(hexagon(), Direction(1, 0));
  expect_rel(p.quad.area, kSqrt3, 1e-12);
  expect_rel(p.para.area, 2 * kSqrt3, 1e-12);
}

TEST(AnchoredConjugatePair, MatchesHalfChordTimesWidth) {
  for (const ConvexPolygon& poly : {unit_square(), right_triangle(), hexagon()}) {
    for (const Direction& u : {Direction(1, 0), Direction(1, 1), Direction(-2, 5)}) {
      expect_rel(anchored_conjugate_pair(poly, u).quad.area, oracle::brute_anchored_quad_area(poly, u),
                 1e-12);
    }
  }
}

TEST(AnchoredConjugatePair, ReversedDirectionGivesSamePair) {
  const ConvexPolygon poly = random_convex(20, 4, 1000);
  const AnchoredPair a = anchored_conjugate_pair(poly, Direction(3, 1));
  const AnchoredPair b = anchored_conjugate_pair(poly, Direction(-3, -1));
  EXPECT_EQ(a.quad.area, b.quad.area);
  EXPECT_EQ(a.para.area, b.para.area);
}

TEST(VerifyConjugatePair, AnchoredPairsVerify) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ConvexPolygon poly = random_convex(4 + seed % 30, 1000 + seed, 1000);
    for (int k = 0; k < 20; ++k) {
      const double t = M_PI * (k + 0.37) / 20;
      const Direction u(std::cos(t), std::sin(t));
      const AnchoredPair p = anchored_conjugate_pair(poly, u);
      const ConjugateCertificate c = verify_conjugate_pair(p.quad, p.para, u, poly);
      EXPECT_TRUE(c.valid()) << "seed " << seed << " k " << k;
      expect_rel(p.para.area, 2 * p.quad.area, 1e-12);
    }
  }
}

TEST(VerifyConjugatePair, DetectsCornersOffSides) {
  const ConvexPolygon sq = unit_square();
  QuadResult f;
  f.corners = {Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
  f.area = 1;
  ParaResult g;
  g.corners = {Point{-1, -1}, Point{2, -1}, Point{2, 2}, Point{-1, 2}};
  g.side_dir_ac = Direction(1, 0);
  g.side_dir_bd = Direction(0, 1);
  g.area = 9;
  const ConjugateCertificate c = verify_conjugate_pair(f, g, Direction(1, 0), sq);
  for (bool on_side : c.checks.corner_on_side) EXPECT_FALSE(on_side);
  EXPECT_FALSE(c.valid());
}

TEST(VerifyConjugatePair, DetectsUnanchoredDiagonal) {
  const ConvexPolygon sq = unit_square();
  const AnchoredPair p = anchored_conjugate_pair(sq, Direction(1, 0));
  QuadResult f = p.quad;
  f.corners[2] = f.corners[2] + Vec{0, 0.25};
  const ConjugateCertificate c = verify_conjugate_pair(f, p.para, Direction(1, 0), sq);
  EXPECT_FALSE(c.checks.anchored_diagonal);
}

TEST(CombinedExtremes, NamedValues) {
  ExtremesReport r = combined_extremes(unit_square());
  EXPECT_EQ(r.max_quad.area, 1.0);
  EXPECT_EQ(r.min_para.area, 1.0);

  r = combined_extremes(right_triangle());
  EXPECT_EQ(r.max_quad.area, 0.5);
  EXPECT_EQ(r.min_para.area, 1.0);

  r = combined_extremes(hexagon());
  expect_rel(r.max_quad.area, kSqrt3, 1e-12);
  expect_rel(r.min_para.area, 2 * kSqrt3, 1e-12);
}

TEST(CombinedExtremes, CertificatesAndParaInvariants) {
  for (const ConvexPolygon& poly : corpus()) {
    const ExtremesReport r = combined_extremes(poly);
    EXPECT_TRUE(r.quad_certificate.valid());
    EXPECT_TRUE(r.para_certificate.valid());
    EXPECT_LE(r.predicate_count, 64u * poly.size());

    const ParaResult& g = r.min_para;
    const double scale = poly.scale();
    // Opposite sides parallel, and area = |b| w.
    const Vec side_a = g.corners[1] - g.corners[0];
    const Vec side_b = g.corners[2] - g.corners[1];
    const Vec side_c = g.corners[3] - g.corners[2];
    const Vec side_d = g.corners[0] - g.corners[3];
    EXPECT_LE(std::abs(det(side_a, side_c)), 1e-9 * scale * scale);
    EXPECT_LE(std::abs(det(side_b, side_d)), 1e-9 * scale * scale);
    expect_rel(std::abs(det(side_a, side_b)), g.area, 1e-9);
    for (const Point& v : poly.vertices()) {
      for (int k = 0; k < 4; ++k) {
        const Vec side = g.corners[(k + 1) % 4] - g.corners[k];
        EXPECT_GE(det(side, v - g.corners[k]) / norm(side), -1e-9 * scale);
      }
    }
    expect_rel(r.max_quad.area,
               quad_area(r.max_quad.corners[0], r.max_quad.corners[1], r.max_quad.corners[2],
                         r.max_quad.corners[3]),
               1e-12);
  }
}

TEST(LargestQuadrilateral, Examples) {
  const QuadResult sq = largest_quadrilateral(unit_square());
  EXPECT_EQ(sq.area, 1.0);
  std::vector<std::size_t> idx;
  for (const auto& i : sq.vertex_indices) idx.push_back(i.value());
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{0, 1, 2, 3}));

  expect_rel(largest_quadrilateral(hexagon()).area, kSqrt3, 1e-12);

  const QuadResult tri = largest_quadrilateral(right_triangle());
  EXPECT_EQ(tri.area, 0.5);
  std::set<std::size_t> distinct;
  for (const auto& i : tri.vertex_indices) distinct.insert(i.value());
  EXPECT_EQ(distinct.size(), 3u);
}

TEST(SmallestParallelogram, Examples) {
  EXPECT_EQ(smallest_parallelogram(unit_square()).area, 1.0);
  EXPECT_EQ(smallest_parallelogram(right_triangle()).area, 1.0);
  expect_rel(smallest_parallelogram(hexagon()).area, 2 * kSqrt3, 1e-12);
}

TEST(SmallestParallelogram, FlushOnAllFourSides) {
  // Sides lie on two pairs of parallel edges. A literal reading of the
  // edge-sweep loop skips this configuration.
  const ConvexPolygon poly = parallel_edge_polygon(8, 116);
  const double want = oracle::brute_smallest_para(poly).area;
  expect_rel(smallest_parallelogram(poly).area, want, 1e-12);
  expect_rel(combined_extremes(poly).min_para.area, want, 1e-12);
}

TEST(Algorithms, AgreeWithOraclesAndEachOther) {
  for (const ConvexPolygon& poly : corpus()) {
    const ExtremesReport r = combined_extremes(poly);
    const double quad = oracle::brute_largest_quad(poly).area;
    const double para = oracle::brute_smallest_para(poly).area;
    EXPECT_EQ(r.max_quad.area, quad);
    EXPECT_EQ(largest_quadrilateral(poly).area, quad);
    expect_rel(r.min_para.area, para, 1e-12);
    expect_rel(smallest_parallelogram(poly).area, para, 1e-12);
  }
}

TEST(Algorithms, DualityInequality) {
  for (const ConvexPolygon& poly : corpus()) {
    const ExtremesReport r = combined_extremes(poly);
    EXPECT_LE(r.min_para.area / 2, r.max_quad.area);
  }
}

TEST(Algorithms, RelabelingInvariance) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ConvexPolygon poly = random_convex(5 + seed, seed, 1000);
    const ExtremesReport base = combined_extremes(poly);
    std::vector<Point> v(poly.vertices().begin(), poly.vertices().end());
    for (std::size_t shift = 1; shift < v.size(); shift += 2) {
      std::vector<Point> rotated(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) rotated[i] = v[(i + shift) % v.size()];
      const ExtremesReport r = combined_extremes(make_convex_polygon(rotated));
      EXPECT_EQ(r.max_quad.area, base.max_quad.area);
      EXPECT_EQ(r.min_para.area, base.min_para.area);
    }
    std::vector<Point> reversed(v.rbegin(), v.rend());
    const ExtremesReport r = combined_extremes(make_convex_polygon(reversed));
    EXPECT_EQ(r.max_quad.area, base.max_quad.area);
    EXPECT_EQ(r.min_para.area, base.min_para.area);
  }
}

TEST(Algorithms, AffineScaling) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ConvexPolygon poly = random_convex(5 + seed, 50 + seed, 1000);
    const ExtremesReport base = combined_extremes(poly);
    // T = [[2, 1], [-1, 3]] + translation, det 7.
    std::vector<Point> mapped;
    for (const Point& p : poly.vertices()) mapped.push_back({2 * p.x + p.y + 11, -p.x + 3 * p.y - 5});
    const ExtremesReport r = combined_extremes(make_convex_polygon(mapped));
    expect_rel(r.max_quad.area, 7 * base.max_quad.area, 1e-9);
    expect_rel(r.min_para.area, 7 * base.min_para.area, 1e-9);
  }
}

TEST(Degenerate, TriangleQuadIsPolygonArea) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ConvexPolygon tri = random_convex(3, seed, 10);
    if (tri.size() != 3) continue;
    EXPECT_EQ(combined_extremes(tri).max_quad.area, polygon_area(tri));
  }
}

TEST(Degenerate, ParallelogramIsItsOwnMinimum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ConvexPolygon p = parallel_edge_polygon(2, seed);
    EXPECT_EQ(combined_extremes(p).min_para.area, polygon_area(p));
  }
}

TEST(SlideCorner, Examples) {
  EXPECT_EQ(slide_corner({0, 0}, {1, 0}, {0.5, 1}, {0, 1}), (Point{0.5, 0}));
  EXPECT_FALSE(slide_corner({0, 0}, {1, 0}, {0, 1}, {1, 0}).has_value());
  EXPECT_EQ(slide_corner({0, 0}, {0, 1}, {1, 0}, {-1, 1}), (Point{0, 1}));
}

TEST(StarArea, MatchesQuadAreaOfSlidCorner) {
  XorShift64Star rng(99);
  auto pt = [&] { return Point{double(rng.uniform(-1000, 1000)), double(rng.uniform(-1000, 1000))}; };
  int checked = 0;
  while (checked < 1000) {
    const Point from = pt(), to = pt(), opp = pt(), b = pt(), d = pt();
    const Vec u = pt();
    if (from == to || (u.x == 0 && u.y == 0)) continue;
    const auto corner = slide_corner(from, to, opp, u);
    const auto star = star_area(from, to, opp, b, d, u);
    ASSERT_EQ(corner.has_value(), star.has_value());
    if (!star) continue;
    const double direct = quad_area(*corner, b, opp, d);
    const double scale = std::max({norm(*corner), 1000.0});
    EXPECT_LE(std::abs(*star - direct), 1e-12 * scale * scale);
    ++checked;
  }
}

TEST(StarArea, ParallelEdgeSkipped) {
  EXPECT_FALSE(star_area({0, 0}, {1, 0}, {0, 1}, {0, 0}, {1, 1}, {2, 0}).has_value());
}

TEST(StarArea, SquareAtEdgeFlushDoublesToSquare) {
  // Side b flush with the bottom edge: A slides on the left edge, C = (1,0).
  const auto area = star_area({0, 1}, {0, 0}, {1, 0}, {0, 0}, {1, 1}, {1, 0});
  ASSERT_TRUE(area.has_value());
  EXPECT_EQ(2 * *area, 1.0);
}

TEST(Sweeps, OverrunGuardNotTriggeredOnParallelEdges) {
  for (int m = 2; m <= 40; ++m) {
    const ConvexPolygon p = parallel_edge_polygon(m, 1000 + m);
    EXPECT_NO_THROW(combined_extremes(p));
    EXPECT_NO_THROW(largest_quadrilateral(p));
    EXPECT_NO_THROW(smallest_parallelogram(p));
  }
}

}  // namespace
}  // namespace quadpara
