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

#include "quadpara/calipers.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace quadpara {

VerticalExtremes vertical_extremes(const ConvexPolygon& poly) {
  const auto verts = poly.vertices();
  VerticalExtremes ext;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    const Point& p = verts[i];
    const Point& lo = verts[ext.a0];
    const Point& hi = verts[ext.c0];
    if (p.y < lo.y || (p.y == lo.y && p.x < lo.x)) ext.a0 = i;
    if (p.y > hi.y || (p.y == hi.y && p.x > hi.x)) ext.c0 = i;
  }
  return ext;
}

AntipodalPair first_edge_start(const ConvexPolygon& poly, PredicateCounter* counter) {
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  std::ptrdiff_t c = 1;
  while (c < n) {
    if (counter != nullptr) ++counter->count;
    if (!(det(poly.edge(0), poly.edge(c)) > 0.0)) break;
    ++c;
  }
  if (c >= n) throw GeometryError(ErrorCode::kSweepOverrun, "no vertex opposite edge p0p1");
  return {0, static_cast<std::size_t>(c)};
}

CaliperSweep::CaliperSweep(const ConvexPolygon& poly, AntipodalPair start,
                           PredicateCounter* counter)
    : poly_(&poly),
      counter_(counter),
      a0_(static_cast<std::ptrdiff_t>(start.i)),
      c0_(static_cast<std::ptrdiff_t>(start.j)) {
  const auto n = static_cast<std::ptrdiff_t>(poly.size());
  a_ = a0_;
  c_ = c0_ > a0_ ? c0_ : c0_ + n;

  // Supporting points parallel to the initial diagonal p_a p_c.
  const Point& pa = poly[a_];
  const Point& pc = poly[c_];
  b_ = a_;
  while (b_ - a_ < n && positive(det(pa - pc, poly.edge(b_)))) ++b_;
  d_ = c_;
  while (d_ - c_ < n && positive(det(pc - pa, poly.edge(d_)))) ++d_;
  if (b_ - a_ >= n || d_ - c_ >= n) {
    throw GeometryError(ErrorCode::kSweepOverrun, "support search did not terminate");
  }
  choose_slider();
  choose_flush();
}

bool CaliperSweep::positive(double v) {
  if (counter_ != nullptr) ++counter_->count;
  return v > 0.0;
}

void CaliperSweep::choose_slider() {
  const ConvexPolygon& p = *poly_;
  if (nonpositive(det(p.edge(a_), p.edge(c_)))) {
    next_ac_ = Slider::kA;
    u_ac_ = p[c_] - p[a_ + 1];
  } else {
    next_ac_ = Slider::kC;
    u_ac_ = p[c_ + 1] - p[a_];
  }
}

void CaliperSweep::choose_flush() {
  const ConvexPolygon& p = *poly_;
  if (nonpositive(det(p.edge(b_), p.edge(d_)))) {
    next_bd_ = Flush::kB;
    u_bd_ = p.edge(b_);
  } else {
    next_bd_ = Flush::kD;
    u_bd_ = p[d_] - p[d_ + 1];
  }
}

std::optional<SweepEvent> CaliperSweep::next() {
  if (done_) return std::nullopt;
  if (events_ >= 8 * poly_->size()) {
    throw GeometryError(ErrorCode::kSweepOverrun,
                        "sweep exceeded 8n events; predicate signs are inconsistent");
  }
  SweepEvent ev;
  ev.a = a();
  ev.b = b();
  ev.c = c();
  ev.d = d();
  ev.next_ac = next_ac_;
  ev.next_bd = next_bd_;
  ev.u_ac = u_ac_;
  ev.u_bd = u_bd_;

  // det(u_bd, u_ac) >= 0: the side event comes first, or ties with the
  // corner event.
  if (nonpositive(-det(u_bd_, u_ac_))) {
    ev.kind = EventKind::kSideFlush;
    if (next_bd_ == Flush::kB) {
      ++b_;
    } else {
      ++d_;
    }
    choose_flush();
  } else {
    ev.kind = EventKind::kCornerAtVertex;
    if (next_ac_ == Slider::kA) {
      ++a_;
    } else {
      ++c_;
    }
    choose_slider();
    if (poly_->wrap(a_) == poly_->wrap(c0_) && poly_->wrap(c_) == poly_->wrap(a0_)) done_ = true;
  }
  ++events_;
  return ev;
}

std::vector<SweepEvent> merged_sweep(const ConvexPolygon& poly, AntipodalPair start) {
  std::vector<SweepEvent> out;
  out.reserve(2 * poly.size() + 2);
  CaliperSweep sweep(poly, start);
  while (auto ev = sweep.next()) out.push_back(*ev);
  return out;
}

std::vector<AntipodalPair> antipodal_vertex_pairs(const ConvexPolygon& poly) {
  const VerticalExtremes ext = vertical_extremes(poly);
  std::vector<AntipodalPair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto add = [&](std::size_t i, std::size_t j) {
    if (seen.insert(std::minmax(i, j)).second) pairs.push_back({i, j});
  };
  add(ext.a0, ext.c0);
  CaliperSweep sweep(poly, {ext.a0, ext.c0});
  while (auto ev = sweep.next()) {
    if (ev->kind == EventKind::kCornerAtVertex) add(sweep.a(), sweep.c());
  }
  return pairs;
}

namespace {

template <class Config>
struct Piece {
  Config cfg;
  Vec start;
  Vec end;
};

bool zero_length(Vec s, Vec e) { return det(s, e) == 0.0 && dot(s, e) > 0.0; }

// h in the half-open counterclockwise cone [s, e), span below a half-turn.
bool in_half_open(Vec s, Vec e, Vec h) {
  const double ds = det(s, h);
  return (ds > 0.0 || (ds == 0.0 && dot(s, h) > 0.0)) && det(h, e) > 0.0;
}

// Pieces cover the half-turn [u0, -u0] in sweep order. Re-cut the cover so
// it starts at the horizontal direction; pieces moved past the end are
// reversed, which swaps the roles of the two ends (`flip`).
template <class Config, class Flip, class Same>
std::vector<Piece<Config>> rotate_to_horizontal(std::vector<Piece<Config>> pieces, Flip flip,
                                                Same same) {
  std::erase_if(pieces, [](const Piece<Config>& p) { return zero_length(p.start, p.end); });
  std::size_t k = pieces.size();
  Vec h;
  for (Vec cand : {Vec{1.0, 0.0}, Vec{-1.0, 0.0}}) {
    for (std::size_t i = 0; i < pieces.size() && k == pieces.size(); ++i) {
      if (in_half_open(pieces[i].start, pieces[i].end, cand)) {
        k = i;
        h = cand;
      }
    }
  }
  if (k == pieces.size()) return pieces;  // unreachable for a valid cover

  auto reversed = [&](const Piece<Config>& p) {
    return Piece<Config>{flip(p.cfg), -p.start, -p.end};
  };
  std::vector<Piece<Config>> out;
  out.reserve(pieces.size() + 1);
  const bool split = det(pieces[k].start, h) != 0.0;
  out.push_back({pieces[k].cfg, split ? h : pieces[k].start, pieces[k].end});
  for (std::size_t i = k + 1; i < pieces.size(); ++i) out.push_back(pieces[i]);
  for (std::size_t i = 0; i < k; ++i) out.push_back(reversed(pieces[i]));
  if (split) out.push_back(reversed({pieces[k].cfg, pieces[k].start, h}));

  std::vector<Piece<Config>> merged;
  for (const auto& p : out) {
    if (!merged.empty() && same(merged.back().cfg, p.cfg)) {
      merged.back().end = p.end;
    } else {
      merged.push_back(p);
    }
  }
  return merged;
}

struct DiagConfig {
  std::size_t q;
  std::size_t e;
  Slider which;
};

struct SupportConfig {
  std::size_t b;
  std::size_t d;
};

}  // namespace

std::vector<DiagonalInterval> diagonal_intervals(const ConvexPolygon& poly) {
  const VerticalExtremes ext = vertical_extremes(poly);
  CaliperSweep sweep(poly, {ext.a0, ext.c0});
  std::vector<Piece<DiagConfig>> pieces;
  while (true) {
    const std::size_t a = sweep.a();
    const std::size_t c = sweep.c();
    auto ev = sweep.next();
    if (!ev) break;
    if (ev->kind != EventKind::kCornerAtVertex) continue;
    const Vec from = poly[static_cast<std::ptrdiff_t>(c)] - poly[static_cast<std::ptrdiff_t>(a)];
    if (ev->next_ac == Slider::kA) {
      pieces.push_back({{c, a, Slider::kA}, from, ev->u_ac});
    } else {
      pieces.push_back({{a, c, Slider::kC}, from, ev->u_ac});
    }
  }
  auto flip = [](DiagConfig cfg) {
    cfg.which = cfg.which == Slider::kA ? Slider::kC : Slider::kA;
    return cfg;
  };
  auto same = [](const DiagConfig& x, const DiagConfig& y) {
    return x.q == y.q && x.e == y.e && x.which == y.which;
  };
  std::vector<DiagonalInterval> out;
  for (const auto& p : rotate_to_horizontal(std::move(pieces), flip, same)) {
    out.push_back({p.cfg.q, p.cfg.e, p.cfg.which, Direction(p.start), Direction(p.end)});
  }
  return out;
}

std::vector<SupportInterval> support_intervals(const ConvexPolygon& poly) {
  const VerticalExtremes ext = vertical_extremes(poly);
  CaliperSweep sweep(poly, {ext.a0, ext.c0});
  const Vec u0 = poly[static_cast<std::ptrdiff_t>(ext.c0)] - poly[static_cast<std::ptrdiff_t>(ext.a0)];
  std::vector<Piece<SupportConfig>> pieces;
  Vec from = u0;
  while (auto ev = sweep.next()) {
    if (ev->kind != EventKind::kSideFlush) continue;
    pieces.push_back({{ev->b, ev->d}, from, ev->u_bd});
    from = ev->u_bd;
  }
  pieces.push_back({{sweep.b(), sweep.d()}, from, -u0});

  auto flip = [](SupportConfig cfg) { return SupportConfig{cfg.d, cfg.b}; };
  auto same = [](const SupportConfig& x, const SupportConfig& y) {
    return x.b == y.b && x.d == y.d;
  };
  std::vector<SupportInterval> out;
  for (const auto& p : rotate_to_horizontal(std::move(pieces), flip, same)) {
    out.push_back({p.cfg.b, p.cfg.d, Direction(p.start), Direction(p.end)});
  }
  return out;
}

}  // namespace quadpara
