// Copyright 2026 The Fracthit Authors
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

#include "fracthit/visibility.hpp"

#include <algorithm>
#include <optional>

namespace fracthit::geom {

namespace {

int angular_half(const Vec2& d) {
  // 0: upper half plane including the positive x-axis; 1: the rest.
  if (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) return 0;
  return 1;
}

bool angular_less(const Vec2& a, const Vec2& b) {
  int ha = angular_half(a), hb = angular_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool same_direction(const Vec2& a, const Vec2& b) {
  return cross(a, b) == 0 && sgn(dot(a, b)) > 0;
}

// First proper crossing of the open ray q + t d (t > 0) with any edge.
// By construction d passes through no vertex, so every contact is a
// transversal crossing of an edge interior.
struct RayHit {
  Rat t;
  size_t edge;
};

std::optional<RayHit> first_hit(const Polygon& H, const Vec2& q, const Vec2& d) {
  const auto& vs = H.vertices();
  const size_t n = vs.size();
  std::optional<RayHit> best;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = vs[i];
    const Vec2& b = vs[(i + 1) % n];
    const Vec2 u = b - a;
    const Rat denom = cross(d, u);
    if (denom == 0) continue;  // parallel; collinear cannot happen off-vertex
    const Rat t = cross(a - q, u) / denom;
    const Rat s = cross(a - q, d) / denom;
    if (t <= 0) continue;
    if (s <= 0 || s >= 1) continue;
    if (!best || t < best->t) best = RayHit{t, i};
  }
  return best;
}

// Intersection of the ray from q in direction d with the closed edge
// (a, b); the ray is known to meet it (endpoint contact allowed).
Vec2 ray_edge_point(const Vec2& q, const Vec2& d, const Vec2& a, const Vec2& b) {
  const Vec2 u = b - a;
  const Rat denom = cross(d, u);
  if (denom == 0) {
    // Ray collinear with the edge: nearest endpoint in direction d.
    const Rat ta = dot(a - q, d);
    const Rat tb = dot(b - q, d);
    if (ta >= 0 && (tb < 0 || ta <= tb)) return a;
    return b;
  }
  const Rat t = cross(a - q, u) / denom;
  return q + d * t;
}

}  // namespace

Polygon visibility_polygon(const Polygon& polygon, const Vec2& q) {
  if (point_in_polygon(q, polygon) == Side::kOutside)
    throw ValidationError("visibility query point lies outside the polygon");

  // Event directions: all vertices plus compass fills so that consecutive
  // events are less than a quarter turn apart (keeps d1 + d2 inside the cone).
  std::vector<Vec2> dirs;
  for (const auto& v : polygon.vertices())
    if (v != q) dirs.push_back(v - q);
  static const long kCompass[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                      {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (const auto& c : kCompass) dirs.emplace_back(c[0], c[1]);
  std::sort(dirs.begin(), dirs.end(), angular_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end(), same_direction), dirs.end());

  const size_t k = dirs.size();
  std::vector<Vec2> ring;
  ring.reserve(2 * k);
  for (size_t j = 0; j < k; ++j) {
    const Vec2& d1 = dirs[j];
    const Vec2& d2 = dirs[(j + 1) % k];
    const Vec2 mid = d1 + d2;
    auto hit = first_hit(polygon, q, mid);
    bool visible = false;
    if (hit) {
      const Vec2 probe = q + mid * (hit->t / 2);
      visible = point_in_polygon(probe, polygon) != Side::kOutside;
    }
    if (visible) {
      const auto& vs = polygon.vertices();
      const Vec2& a = vs[hit->edge];
      const Vec2& b = vs[(hit->edge + 1) % vs.size()];
      ring.push_back(ray_edge_point(q, d1, a, b));
      ring.push_back(ray_edge_point(q, d2, a, b));
    } else {
      ring.push_back(q);
    }
  }
  // Drop consecutive duplicates (cyclically).
  std::vector<Vec2> clean;
  clean.reserve(ring.size());
  for (const auto& p : ring)
    if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  if (clean.size() < 3 || shoelace_area(clean) == 0)
    throw Error("degenerate visibility region");
  return Polygon::unchecked(std::move(clean));
}

}  // namespace fracthit::geom
