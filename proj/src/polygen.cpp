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

#include "quadpara/polygen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace quadpara {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

XorShift64Star::XorShift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t XorShift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::int64_t XorShift64Star::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  // 2^64 mod span, computed without 128-bit arithmetic.
  const std::uint64_t rem = (0 - span) % span;
  std::uint64_t r = next();
  while (r > ~std::uint64_t{0} - rem) r = next();
  return lo + static_cast<std::int64_t>(r % span);
}

GenKind parse_gen_kind(const std::string& name) {
  if (name == "regular") return GenKind::kRegular;
  if (name == "random-hull") return GenKind::kRandomHull;
  if (name == "parallel-edges") return GenKind::kParallelEdges;
  if (name == "lattice") return GenKind::kLattice;
  throw std::invalid_argument("unknown polygon kind '" + name + "'");
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::kRegular: return "regular";
    case GenKind::kRandomHull: return "random-hull";
    case GenKind::kParallelEdges: return "parallel-edges";
    case GenKind::kLattice: return "lattice";
  }
  return "unknown";
}

ConvexPolygon regular_ngon(int n, double circumradius, int rotation_steps) {
  if (n < 3) throw GeometryError(ErrorCode::kTooFewVertices, "regular polygon needs n >= 3");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = std::numbers::pi * (2.0 * k + rotation_steps) / n;
    pts.push_back({circumradius * std::cos(theta), circumradius * std::sin(theta)});
  }
  return make_convex_polygon(std::move(pts));
}

namespace {

using IVec = std::pair<std::int64_t, std::int64_t>;

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t cross(IVec o, IVec a, IVec b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain; collinear points are dropped.
std::vector<IVec> strict_hull(std::vector<IVec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<IVec> hull(2 * pts.size());
  std::size_t k = 0;
  for (const IVec& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point> to_points(const std::vector<IVec>& v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const auto& [x, y] : v) out.push_back({static_cast<double>(x), static_cast<double>(y)});
  return out;
}

bool upper(IVec v) { return v.second > 0 || (v.second == 0 && v.first > 0); }

// Strict angular order over the full turn, starting at direction (1, 0).
bool angle_less(IVec u, IVec v) {
  const bool hu = upper(u);
  const bool hv = upper(v);
  if (hu != hv) return hu;
  return u.first * v.second - u.second * v.first > 0;
}

bool same_direction(IVec u, IVec v) {
  return u.first * v.second - u.second * v.first == 0 && u.first * v.first + u.second * v.second > 0;
}

// Polygon whose edges are the given vectors (summing to zero) in angular
// order; equal directions are merged.
std::vector<IVec> polygon_from_edges(std::vector<IVec> edges) {
  std::erase(edges, IVec{0, 0});
  std::sort(edges.begin(), edges.end(), angle_less);
  std::vector<IVec> merged;
  for (const IVec& e : edges) {
    if (!merged.empty() && same_direction(merged.back(), e)) {
      merged.back().first += e.first;
      merged.back().second += e.second;
    } else {
      merged.push_back(e);
    }
  }
  std::vector<IVec> verts;
  verts.reserve(merged.size());
  IVec p{0, 0};
  for (const IVec& e : merged) {
    verts.push_back(p);
    p.first += e.first;
    p.second += e.second;
  }
  return verts;
}

// Translate so the vertex centroid sits near the origin.
void center(std::vector<IVec>& verts) {
  if (verts.empty()) return;
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  for (const auto& [x, y] : verts) {
    sx += x;
    sy += y;
  }
  const auto count = static_cast<std::int64_t>(verts.size());
  for (auto& [x, y] : verts) {
    x -= sx / count;
    y -= sy / count;
  }
}

template <class Build>
ConvexPolygon with_retries(std::uint64_t seed, Build build) {
  for (std::uint64_t attempt = 0; attempt <= 100; ++attempt) {
    XorShift64Star rng(seed + attempt);
    std::vector<IVec> verts = build(rng);
    if (verts.size() < 3) continue;
    try {
      return make_convex_polygon(to_points(verts));
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeometryError(ErrorCode::kDegenerateSample, "no valid polygon after 100 retries");
}

}  // namespace

ConvexPolygon random_convex(int n_target, std::uint64_t seed, std::int64_t coord_range) {
  if (n_target < 3) throw GeometryError(ErrorCode::kTooFewVertices, "n_target must be >= 3");
  const std::int64_t r = std::max<std::int64_t>(coord_range, 1);
  return with_retries(seed, [&](XorShift64Star& rng) {
    std::vector<IVec> pts;
    pts.reserve(static_cast<std::size_t>(n_target));
    for (int i = 0; i < n_target; ++i) {
      const std::int64_t x = rng.uniform(-r, r);
      const std::int64_t y = isqrt(r * r - x * x);
      pts.push_back({x, rng.uniform(0, 1) == 0 ? y : -y});
    }
    return strict_hull(std::move(pts));
  });
}

ConvexPolygon parallel_edge_polygon(int m, std::uint64_t seed) {
  if (m < 2) throw GeometryError(ErrorCode::kTooFewVertices, "parallel-edge polygon needs m >= 2");
  const std::int64_t k = std::max<std::int64_t>(8, 4 * static_cast<std::int64_t>(m));
  return with_retries(seed, [&](XorShift64Star& rng) {
    std::vector<IVec> dirs;
    while (dirs.size() < static_cast<std::size_t>(m)) {
      IVec v{rng.uniform(-k, k), rng.uniform(0, k)};
      if (!upper(v) || std::gcd(v.first, v.second) != 1) continue;
      const bool dup = std::any_of(dirs.begin(), dirs.end(), [&](IVec w) {
        return v.first * w.second - v.second * w.first == 0;
      });
      if (!dup) dirs.push_back(v);
    }
    std::vector<IVec> edges = dirs;
    for (const IVec& v : dirs) edges.push_back({-v.first, -v.second});
    auto verts = polygon_from_edges(std::move(edges));
    center(verts);
    return verts;
  });
}

ConvexPolygon lattice_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw GeometryError(ErrorCode::kTooFewVertices, "lattice polygon needs n >= 3");
  const auto k = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  std::vector<IVec> pool;
  for (std::int64_t y = 0; y <= k; ++y) {
    for (std::int64_t x = -k; x <= k; ++x) {
      if (upper({x, y}) && std::gcd(x, y) == 1) pool.push_back({x, y});
    }
  }
  const auto total = static_cast<std::size_t>(n - 1);
  const std::size_t half = total / 2;
  return with_retries(seed, [&](XorShift64Star& rng) {
    // Two independent samples from the upper half plane; the second is
    // negated to form the lower chain, and one closing edge fixes the sum.
    auto sample = [&](std::size_t count) {
      std::vector<IVec> v = pool;
      for (std::size_t i = 0; i < count; ++i) {
        const auto j = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(v.size()) - 1));
        std::swap(v[i], v[j]);
      }
      v.resize(count);
      return v;
    };
    std::vector<IVec> edges = sample(half);
    for (const IVec& w : sample(total - half)) edges.push_back({-w.first, -w.second});
    IVec sum{0, 0};
    for (const IVec& e : edges) {
      sum.first += e.first;
      sum.second += e.second;
    }
    edges.push_back({-sum.first, -sum.second});
    auto verts = polygon_from_edges(std::move(edges));
    center(verts);
    return verts;
  });
}

ConvexPolygon generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::kRegular: return regular_ngon(spec.n, spec.radius, spec.rotation_steps);
    case GenKind::kRandomHull: return random_convex(spec.n, spec.seed, spec.coord_range);
    case GenKind::kParallelEdges: return parallel_edge_polygon(spec.n / 2, spec.seed);
    case GenKind::kLattice: return lattice_polygon(spec.n, spec.seed);
  }
  throw std::invalid_argument("unknown polygon kind");
}

}  // namespace quadpara
