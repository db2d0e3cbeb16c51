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

// Rotating calipers over a convex polygon.
//
// The sweep maintains an antipodal diagonal AC and two supporting lines
// through B and D parallel to AC while the diagonal direction turns through
// a half-turn. Directions are compared only through determinant signs; no
// angle is ever computed.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quadpara/geom.hpp"

namespace quadpara {

/// Number of determinant-sign predicates evaluated by a sweep.
struct PredicateCounter {
  std::uint64_t count = 0;
};

struct AntipodalPair {
  std::size_t i = 0;
  std::size_t j = 0;
};

/// a0: lowest vertex, leftmost among ties. c0: highest, rightmost among ties.
struct VerticalExtremes {
  std::size_t a0 = 0;
  std::size_t c0 = 0;
};

/// Which diagonal endpoint slides along an edge.
enum class Slider : std::uint8_t { kA, kC };
/// Which parallelogram side becomes flush with an edge next.
enum class Flush : std::uint8_t { kB, kD };

/// Over [dir_start, dir_end] the chord through p_q parallel to the current
/// direction ends on edge e (p_e p_{e+1}); the lines parallel to edge e
/// through p_q and through the edge support the polygon.
struct DiagonalInterval {
  std::size_t q = 0;
  std::size_t e = 0;
  Slider which_slides = Slider::kA;
  Direction dir_start;
  Direction dir_end;
};

/// Over [dir_start, dir_end] the lines through p_b and p_d parallel to the
/// current direction support the polygon; p_b lies to its right.
struct SupportInterval {
  std::size_t b = 0;
  std::size_t d = 0;
  Direction dir_start;
  Direction dir_end;
};

enum class EventKind : std::uint8_t {
  kSideFlush,       // side b or d becomes flush with an edge; b or d advances
  kCornerAtVertex,  // the sliding corner reaches a vertex; a or c advances
};

/// One step of the merged sweep. Index and direction fields hold the state
/// at the moment the event fires, before the advance.
struct SweepEvent {
  EventKind kind = EventKind::kSideFlush;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  std::size_t d = 0;
  Slider next_ac = Slider::kA;
  Flush next_bd = Flush::kB;
  Vec u_ac;  // direction at which the sliding corner reaches its next vertex
  Vec u_bd;  // direction at which side b or d becomes edge-flush

  /// The event's own direction (u_bd for side events, u_ac otherwise).
  Vec direction() const { return kind == EventKind::kSideFlush ? u_bd : u_ac; }
};

VerticalExtremes vertical_extremes(const ConvexPolygon& poly);

/// Start pair used by the combined sweep: A = p_0 and the vertex C whose
/// supporting line is parallel to edge p_0 p_1.
AntipodalPair first_edge_start(const ConvexPolygon& poly,
                               PredicateCounter* counter = nullptr);

/// Incremental merged sweep. Yields events in sweep order until (a, c)
/// returns to the swapped start pair.
class CaliperSweep {
 public:
  CaliperSweep(const ConvexPolygon& poly, AntipodalPair start,
               PredicateCounter* counter = nullptr);

  /// Next event, or nullopt once the half-turn is complete. Throws
  /// GeometryError(kSweepOverrun) past 8n events.
  std::optional<SweepEvent> next();

  bool done() const { return done_; }
  std::size_t a() const { return poly_->wrap(a_); }
  std::size_t b() const { return poly_->wrap(b_); }
  std::size_t c() const { return poly_->wrap(c_); }
  std::size_t d() const { return poly_->wrap(d_); }
  Slider next_ac() const { return next_ac_; }
  Flush next_bd() const { return next_bd_; }
  Vec u_ac() const { return u_ac_; }
  Vec u_bd() const { return u_bd_; }
  std::size_t events() const { return events_; }

 private:
  bool positive(double v);
  bool nonpositive(double v) { return !positive(v); }
  void choose_slider();
  void choose_flush();

  const ConvexPolygon* poly_;
  PredicateCounter* counter_;
  std::ptrdiff_t a0_, c0_;
  std::ptrdiff_t a_, b_, c_, d_;
  Slider next_ac_ = Slider::kA;
  Flush next_bd_ = Flush::kB;
  Vec u_ac_, u_bd_;
  std::size_t events_ = 0;
  bool done_ = false;
};

/// Full event stream from `start`; at most 4n events.
std::vector<SweepEvent> merged_sweep(const ConvexPolygon& poly, AntipodalPair start);

/// Antipodal vertex pairs visited by the diagonal of the sweep, each
/// unordered pair once. Pairs that admit parallel supporting lines in only
/// one direction (vertices of two parallel edges) may be absent.
std::vector<AntipodalPair> antipodal_vertex_pairs(const ConvexPolygon& poly);

/// Intervals of diagonal directions, starting at the horizontal direction
/// and covering a half-turn. Consecutive intervals share boundary
/// directions; no interval has zero length.
std::vector<DiagonalInterval> diagonal_intervals(const ConvexPolygon& poly);

/// Intervals of support directions, starting at the horizontal direction and
/// covering a half-turn. Boundaries are the edge directions of the polygon.
std::vector<SupportInterval> support_intervals(const ConvexPolygon& poly);

}  // namespace quadpara
