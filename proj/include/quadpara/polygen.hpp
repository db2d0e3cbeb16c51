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

// Deterministic convex polygon generators.
//
// Randomness comes from XorShift64Star seeded through SplitMix64, so any
// implementation that follows the recipes below reproduces the same
// polygons bit for bit:
//
//   splitmix64(x):  x += 0x9E3779B97F4A7C15
//                   z = x
//                   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                   return z ^ (z >> 31)
//
//   seeding:        state = splitmix64(seed), replaced by
//                   0x9E3779B97F4A7C15 if that is zero
//
//   next():         state ^= state >> 12
//                   state ^= state << 25
//                   state ^= state >> 27
//                   return state * 0x2545F4914F6CDD1D
//
//   uniform(lo, hi) (inclusive): span = hi - lo + 1; draw r = next() until
//                   r < 2^64 - (2^64 mod span); return lo + r mod span
//
// All arithmetic is modulo 2^64. Retry k (k = 1, 2, ...) of a generator
// reseeds with splitmix64(seed + k).
//
// The random-hull, parallel-edges and lattice generators use integer
// arithmetic only.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quadpara/geom.hpp"

namespace quadpara {

std::uint64_t splitmix64(std::uint64_t x);

class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class GenKind { kRegular, kRandomHull, kParallelEdges, kLattice };

struct GenSpec {
  GenKind kind = GenKind::kRandomHull;
  int n = 8;
  std::uint64_t seed = 1;
  std::int64_t coord_range = 1000;
  double radius = 1.0;    // regular only
  int rotation_steps = 0;  // regular only, in units of 1/(2n) turn
};

/// Parses "regular", "random-hull", "parallel-edges", "lattice".
GenKind parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

ConvexPolygon regular_ngon(int n, double circumradius, int rotation_steps = 0);

/// Convex hull of integer points on the circle of radius `coord_range`
/// (x uniform, y = ±isqrt(R^2 - x^2)). At most `n_target` vertices.
/// Throws GeometryError(kDegenerateSample) after 100 failed retries.
ConvexPolygon random_convex(int n_target, std::uint64_t seed, std::int64_t coord_range);

/// Centrally symmetric 2m-gon with m pairs of exactly parallel opposite
/// edges, built from m random primitive integer edge vectors.
ConvexPolygon parallel_edge_polygon(int m, std::uint64_t seed);

/// Convex lattice polygon with about `n` vertices, assembled from
/// angularly sorted primitive edge vectors of length O(sqrt n). Meant for
/// large n: coordinates grow like n^1.5, but every sweep predicate stays a
/// product of a coordinate difference and a short edge vector, so signs
/// remain exact up to n around 10^7.
ConvexPolygon lattice_polygon(int n, std::uint64_t seed);

ConvexPolygon generate(const GenSpec& spec);

}  // namespace quadpara
