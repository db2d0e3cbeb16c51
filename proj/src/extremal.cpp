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

#include "quadpara/extremal.hpp"

#include <algorithm>
#include <limits>

namespace quadpara {

bool CertificateChecks::all() const {
  return anchored_diagonal && anchored_sides &&
         std::all_of(corner_on_side.begin(), corner_on_side.end(), [](bool b) { return b; }) &&
         quad_in_polygon && polygon_in_para && area_ratio;
}

std::optional<Point> slide_corner(Point edge_from, Point edge_to, Point opposite, Vec u_bd) {
  const Vec e = edge_to - edge_from;
  const double denom = det(e, u_bd);
  if (denom == 0.0) return std::nullopt;
  const double s = det(opposite - edge_from, u_bd) / denom;
  return edge_from + s * e;
}

std::optional<double> star_area(Point edge_from, Point edge_to, Point opposite, Point b, Point d,
                                Vec u_bd) {
  const Vec e = edge_to - edge_from;
  const double denom = det(e, u_bd);
  if (denom == 0.0) return std::nullopt;
  return 0.5 * std::abs(det(e, opposite - edge_from) * det(u_bd, d - b) / denom);
}

std::array<Point, 4> parallelogram_corners(Point on_a, Point on_b, Point on_c, Point on_d,
                                           const Direction& dir_ac, const Direction& dir_bd) {
  const Line a{on_a, dir_ac};
  const Line b{on_b, dir_bd};
  const Line c{on_c, dir_ac};
  const Line d{on_d, dir_bd};
  return {line_intersection(d, a), line_intersection(a, b), line_intersection(b, c),
          line_intersection(c, d)};
}

namespace {

double parallelogram_area(const std::array<Point, 4>& g) {
  return std::abs(det(g[1] - g[0], g[3] - g[0]));
}

std::optional<std::size_t> index_if_vertex(const ConvexPolygon& poly, Point x, std::size_t i) {
  if (poly[static_cast<std::ptrdiff_t>(i)] == x) return i;
  if (poly[static_cast<std::ptrdiff_t>(i) + 1] == x) return poly.wrap(static_cast<std::ptrdiff_t>(i) + 1);
  return std::nullopt;
}

// Parallelogram around the vertex quadrilateral p_a p_b p_c p_d whose
// sides a and c are parallel to edge `slid_edge`, the edge the moving
// diagonal endpoint just traversed.
ParaResult conjugate_of_vertex_quad(const ConvexPolygon& poly, std::size_t a, std::size_t b,
                                    std::size_t c, std::size_t d, std::size_t slid_edge) {
  auto at = [&](std::size_t i) { return poly[static_cast<std::ptrdiff_t>(i)]; };
  ParaResult para;
  para.side_dir_bd = Direction(at(c) - at(a));
  para.side_dir_ac = Direction(poly.edge(static_cast<std::ptrdiff_t>(slid_edge)));
  para.corners = parallelogram_corners(at(a), at(b), at(c), at(d), para.side_dir_ac,
                                       para.side_dir_bd);
  para.area = parallelogram_area(para.corners);
  para.touch_indices = {a, b, c, d};
  return para;
}

QuadResult vertex_quad(const ConvexPolygon& poly, std::size_t a, std::size_t b, std::size_t c,
                       std::size_t d) {
  auto at = [&](std::size_t i) { return poly[static_cast<std::ptrdiff_t>(i)]; };
  QuadResult q;
  q.corners = {at(a), at(b), at(c), at(d)};
  q.vertex_indices = {a, b, c, d};
  q.area = quad_area(at(a), at(b), at(c), at(d));
  return q;
}

// Conjugate pair at an edge-flush event of the combined sweep: sides b, d
// parallel to u_bd, one diagonal endpoint slid along its edge.
AnchoredPair pair_at_flush(const ConvexPolygon& poly, const SweepEvent& ev, double para_area) {
  auto at = [&](std::size_t i) { return poly[static_cast<std::ptrdiff_t>(i)]; };
  AnchoredPair out;
  QuadResult& q = out.quad;
  ParaResult& g = out.para;
  g.side_dir_bd = Direction(ev.u_bd);
  if (ev.next_ac == Slider::kA) {
    const Point a = *slide_corner(at(ev.a), at(ev.a + 1), at(ev.c), ev.u_bd);
    q.corners = {a, at(ev.b), at(ev.c), at(ev.d)};
    q.vertex_indices = {index_if_vertex(poly, a, ev.a), ev.b, ev.c, ev.d};
    g.side_dir_ac = Direction(poly.edge(static_cast<std::ptrdiff_t>(ev.a)));
  } else {
    const Point c = *slide_corner(at(ev.c), at(ev.c + 1), at(ev.a), ev.u_bd);
    q.corners = {at(ev.a), at(ev.b), c, at(ev.d)};
    q.vertex_indices = {ev.a, ev.b, index_if_vertex(poly, c, ev.c), ev.d};
    g.side_dir_ac = Direction(poly.edge(static_cast<std::ptrdiff_t>(ev.c)));
  }
  q.area = quad_area(q.corners[0], q.corners[1], q.corners[2], q.corners[3]);
  g.corners = parallelogram_corners(at(ev.a), at(ev.b), at(ev.c), at(ev.d), g.side_dir_ac,
                                    g.side_dir_bd);
  g.area = para_area;
  g.touch_indices = {ev.a, ev.b, ev.c, ev.d};
  return out;
}

}  // namespace

AnchoredPair anchored_conjugate_pair(const ConvexPolygon& poly, const Direction& u) {
  auto at = [&](std::size_t i) { return poly[static_cast<std::ptrdiff_t>(i)]; };
  const Vec uv = u.vec();

  Vec dir = uv;
  const DiagonalInterval* diag = nullptr;
  const auto diags = diagonal_intervals(poly);
  for (const auto& iv : diags) {
    for (Vec cand : {uv, -uv}) {
      if (diag == nullptr && in_closed_cone(iv.dir_start.vec(), iv.dir_end.vec(), cand)) {
        diag = &iv;
        dir = cand;
      }
    }
  }
  if (diag == nullptr) throw GeometryError(ErrorCode::kDegenerate, "direction not covered");

  const Point q = at(diag->q);
  const Point slid = line_intersection(Line{q, Direction(dir)},
                                       Line{at(diag->e), Direction(poly.edge(static_cast<std::ptrdiff_t>(diag->e)))});
  const bool a_slides = diag->which_slides == Slider::kA;
  const Point corner_a = a_slides ? slid : q;
  const Point corner_c = a_slides ? q : slid;

  std::size_t b = 0;
  std::size_t d = 0;
  bool found = false;
  for (const auto& iv : support_intervals(poly)) {
    if (found) break;
    if (in_closed_cone(iv.dir_start.vec(), iv.dir_end.vec(), dir)) {
      b = iv.b;
      d = iv.d;
      found = true;
    } else if (in_closed_cone(iv.dir_start.vec(), iv.dir_end.vec(), -dir)) {
      b = iv.d;
      d = iv.b;
      found = true;
    }
  }
  if (!found) throw GeometryError(ErrorCode::kDegenerate, "direction not covered");

  AnchoredPair out;
  QuadResult& f = out.quad;
  f.corners = {corner_a, at(b), corner_c, at(d)};
  const auto slid_index = index_if_vertex(poly, slid, diag->e);
  f.vertex_indices = {a_slides ? slid_index : diag->q, b, a_slides ? diag->q : slid_index, d};
  f.area = quad_area(f.corners[0], f.corners[1], f.corners[2], f.corners[3]);

  ParaResult& g = out.para;
  g.side_dir_bd = Direction(dir);
  g.side_dir_ac = Direction(poly.edge(static_cast<std::ptrdiff_t>(diag->e)));
  g.corners = parallelogram_corners(corner_a, at(b), corner_c, at(d), g.side_dir_ac,
                                    g.side_dir_bd);
  g.area = parallelogram_area(g.corners);
  g.touch_indices = {a_slides ? diag->e : diag->q, b, a_slides ? diag->q : diag->e, d};
  return out;
}

ConjugateCertificate verify_conjugate_pair(const QuadResult& quad, const ParaResult& para,
                                           const Direction& u, const ConvexPolygon& poly,
                                           double tol) {
  const double scale = std::max(poly.scale(), 1.0);
  const double dist_tol = tol * scale;
  const Vec unit = (1.0 / norm(u.vec())) * u.vec();
  const auto& f = quad.corners;
  const auto& g = para.corners;

  ConjugateCertificate cert{quad, para, u, {}};
  CertificateChecks& ck = cert.checks;

  ck.anchored_diagonal = std::abs(det(f[2] - f[0], unit)) <= dist_tol;

  auto parallel_to_u = [&](Vec side) {
    const double len = norm(side);
    return len == 0.0 || std::abs(det(side, unit)) <= tol * len;
  };
  ck.anchored_sides = parallel_to_u(g[2] - g[1]) && parallel_to_u(g[0] - g[3]);

  for (std::size_t k = 0; k < 4; ++k) {
    ck.corner_on_side[k] = distance_to_segment(f[k], g[k], g[(k + 1) % 4]) <= dist_tol;
  }

  ck.quad_in_polygon = std::all_of(f.begin(), f.end(),
                                   [&](Point x) { return contains_point(poly, x, dist_tol); });

  const double orient = det(g[1] - g[0], g[3] - g[0]) >= 0.0 ? 1.0 : -1.0;
  ck.polygon_in_para = true;
  for (const Point& p : poly.vertices()) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Vec side = g[(k + 1) % 4] - g[k];
      const double len = norm(side);
      if (len == 0.0) continue;
      if (orient * det(side, p - g[k]) / len < -dist_tol) ck.polygon_in_para = false;
    }
  }

  const double area_g = parallelogram_area(g);
  const double area_f = quad_area(f[0], f[1], f[2], f[3]);
  ck.area_ratio = std::abs(area_g - 2.0 * area_f) <= tol * scale * scale;
  return cert;
}

ExtremesReport combined_extremes(const ConvexPolygon& poly) {
  PredicateCounter counter;
  const AntipodalPair start = first_edge_start(poly, &counter);
  CaliperSweep sweep(poly, start, &counter);

  double best_quad = -1.0;
  std::array<std::size_t, 4> quad_idx{};
  std::size_t quad_slid_edge = 0;

  double best_para = std::numeric_limits<double>::infinity();
  std::optional<SweepEvent> para_event;

  auto at = [&](std::size_t i) { return poly[static_cast<std::ptrdiff_t>(i)]; };
  while (auto ev = sweep.next()) {
    if (ev->kind == EventKind::kSideFlush) {
      const bool a_slides = ev->next_ac == Slider::kA;
      const std::size_t from = a_slides ? ev->a : ev->c;
      const std::size_t opposite = a_slides ? ev->c : ev->a;
      const auto area = star_area(at(from), at(from + 1), at(opposite), at(ev->b), at(ev->d),
                                  ev->u_bd);
      if (area && 2.0 * *area < best_para) {
        best_para = 2.0 * *area;
        para_event = ev;
      }
    } else {
      const std::size_t a = sweep.a();
      const std::size_t b = sweep.b();
      const std::size_t c = sweep.c();
      const std::size_t d = sweep.d();
      const double area = quad_area(at(a), at(b), at(c), at(d));
      if (area > best_quad) {
        best_quad = area;
        quad_idx = {a, b, c, d};
        quad_slid_edge = ev->next_ac == Slider::kA ? ev->a : ev->c;
      }
    }
  }
  if (!para_event) {
    throw GeometryError(ErrorCode::kSweepOverrun, "sweep produced no edge-flush event");
  }

  ExtremesReport report;
  report.max_quad = vertex_quad(poly, quad_idx[0], quad_idx[1], quad_idx[2], quad_idx[3]);
  const ParaResult quad_dual = conjugate_of_vertex_quad(poly, quad_idx[0], quad_idx[1],
                                                        quad_idx[2], quad_idx[3], quad_slid_edge);
  report.quad_certificate = verify_conjugate_pair(report.max_quad, quad_dual,
                                                  quad_dual.side_dir_bd, poly);

  const AnchoredPair flush = pair_at_flush(poly, *para_event, best_para);
  report.min_para = flush.para;
  report.para_certificate = verify_conjugate_pair(flush.quad, flush.para,
                                                  flush.para.side_dir_bd, poly);
  report.predicate_count = counter.count;
  return report;
}

QuadResult largest_quadrilateral(const ConvexPolygon& poly, PredicateCounter* counter) {
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  auto positive = [counter](double v) {
    if (counter != nullptr) ++counter->count;
    return v > 0.0;
  };
  const VerticalExtremes ext = vertical_extremes(poly);
  const auto a0 = static_cast<std::ptrdiff_t>(ext.a0);
  const auto c0 = static_cast<std::ptrdiff_t>(ext.c0);
  std::ptrdiff_t a = a0;
  std::ptrdiff_t b = a0;
  std::ptrdiff_t c = c0 > a0 ? c0 : c0 + n;
  std::ptrdiff_t d = c;

  double best = -1.0;
  std::array<std::ptrdiff_t, 4> idx{};
  std::ptrdiff_t steps = 0;
  const std::ptrdiff_t limit = 8 * n;
  do {
    while (positive(det(poly[a] - poly[c], poly.edge(b)))) {
      ++b;
      if (++steps > limit) throw GeometryError(ErrorCode::kSweepOverrun, "b did not settle");
    }
    while (positive(det(poly[c] - poly[a], poly.edge(d)))) {
      ++d;
      if (++steps > limit) throw GeometryError(ErrorCode::kSweepOverrun, "d did not settle");
    }
    const double area = quad_area(poly[a], poly[b], poly[c], poly[d]);
    if (area > best) {
      best = area;
      idx = {a, b, c, d};
    }
    if (!positive(det(poly.edge(a), poly.edge(c)))) {
      ++a;
    } else {
      ++c;
    }
    if (++steps > limit) throw GeometryError(ErrorCode::kSweepOverrun, "antipodal walk overran");
  } while (!(poly.wrap(a) == ext.c0 && poly.wrap(c) == ext.a0));

  return vertex_quad(poly, poly.wrap(idx[0]), poly.wrap(idx[1]), poly.wrap(idx[2]),
                     poly.wrap(idx[3]));
}

ParaResult smallest_parallelogram(const ConvexPolygon& poly, PredicateCounter* counter) {
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  auto count = [counter] {
    if (counter != nullptr) ++counter->count;
  };
  auto positive = [&](double v) {
    count();
    return v > 0.0;
  };
  auto nonnegative = [&](double v) {
    count();
    return v >= 0.0;
  };

  std::ptrdiff_t c = 1;
  std::ptrdiff_t d = 1;
  std::ptrdiff_t a = 2;
  std::ptrdiff_t steps = 0;
  const std::ptrdiff_t limit = 8 * n;
  auto tick = [&] {
    if (++steps > limit) throw GeometryError(ErrorCode::kSweepOverrun, "parallelogram sweep overran");
  };
  // p_a: supporting point opposite edge p_c p_{c+1}.
  while (positive(det(poly.edge(c), poly.edge(a)))) {
    ++a;
    tick();
  }

  double best = std::numeric_limits<double>::infinity();
  std::array<std::ptrdiff_t, 4> idx{};
  for (std::ptrdiff_t b = 0; b < n; ++b) {
    const Vec eb = poly.edge(b);
    while (positive(det(eb, poly.edge(d)))) {
      ++d;
      tick();
    }
    // Advance C's edge until the height of p_a over edge b lies between
    // those of p_c and p_{c+1}. If edge a is parallel to edge c, side a
    // holds the whole edge p_a p_{a+1} and its lower end decides.
    auto low_a = [&] {
      count();
      return det(poly.edge(c), poly.edge(a)) == 0.0 ? poly[a + 1] : poly[a];
    };
    while (positive(det(eb, low_a() - poly[c + 1]))) {
      ++c;
      tick();
      while (true) {
        const double turn = det(poly.edge(c), poly.edge(a));
        count();
        const bool advance =
            turn > 0.0 || (turn == 0.0 && nonnegative(det(eb, poly[a + 1] - poly[c])));
        if (!advance) break;
        ++a;
        tick();
      }
    }
    if (nonnegative(det(eb, poly[a] - poly[c]))) {
      const auto area = star_area(poly[c], poly[c + 1], poly[a], poly[b], poly[d], eb);
      if (area && 2.0 * *area < best) {
        best = 2.0 * *area;
        idx = {a, b, c, d};
      }
    }
  }
  if (!std::isfinite(best)) {
    throw GeometryError(ErrorCode::kSweepOverrun, "no candidate parallelogram found");
  }

  ParaResult para;
  const Vec eb = poly.edge(idx[1]);
  const Vec ec = poly.edge(idx[2]);
  para.side_dir_bd = Direction(eb);
  para.side_dir_ac = Direction(ec);
  para.corners = parallelogram_corners(poly[idx[0]], poly[idx[1]], poly[idx[2]], poly[idx[3]],
                                       para.side_dir_ac, para.side_dir_bd);
  para.area = best;
  para.touch_indices = {poly.wrap(idx[0]), poly.wrap(idx[1]), poly.wrap(idx[2]),
                        poly.wrap(idx[3])};
  return para;
}

}  // namespace quadpara
