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

#ifndef FRACTHIT_GEOMETRY_HPP_
#define FRACTHIT_GEOMETRY_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fracthit/errors.hpp"
#include "fracthit/rational.hpp"

namespace fracthit::geom {

// All predicates in this kernel are exact over rationals. There is no
// epsilon anywhere; degeneracies (collinear points, touching segments,
// boundary queries) are decided combinatorially.

struct Vec2 {
  Rat x, y;

  Vec2() : x(0), y(0) {}
  Vec2(Rat xx, Rat yy) : x(std::move(xx)), y(std::move(yy)) {}
  Vec2(long xx, long yy) : x(xx), y(yy) {}

  Vec2 operator+(const Vec2& o) const { return Vec2(x + o.x, y + o.y); }
  Vec2 operator-(const Vec2& o) const { return Vec2(x - o.x, y - o.y); }
  Vec2 operator*(const Rat& s) const { return Vec2(x * s, y * s); }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
  // Lexicographic; used for deterministic maps and tie-breaks.
  bool operator<(const Vec2& o) const {
    int c = cmp(x, o.x);
    if (c != 0) return c < 0;
    return cmp(y, o.y) < 0;
  }
};

inline Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Sign of the area of triangle (o, a, b): +1 for a left turn.
int orientation(const Vec2& o, const Vec2& a, const Vec2& b);

/// p on the closed segment [a, b].
bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

enum class Side { kOutside, kBoundary, kInside };

/// Signed shoelace area of a vertex ring (positive when counter-clockwise).
Rat shoelace_area(const std::vector<Vec2>& ring);

class Polygon {
 public:
  Polygon() = default;

  /// Validating constructor: at least 3 vertices, no repeated or spike
  /// vertices, simple boundary, nonzero area. A clockwise ring is reversed.
  explicit Polygon(std::vector<Vec2> vs);

  /// Internal fast path for rings known to be valid by construction
  /// (visibility output, split pieces). Only normalizes orientation.
  static Polygon unchecked(std::vector<Vec2> vs);

  const std::vector<Vec2>& vertices() const { return vs_; }
  size_t size() const { return vs_.size(); }
  const Vec2& operator[](size_t i) const { return vs_[i]; }

  const Rat& area() const { return area_; }

 private:
  std::vector<Vec2> vs_;
  Rat area_;
};

/// Exact positive area. Errors on degenerate input (< 3 vertices).
Rat shoelace_area(const Polygon& poly);

Side point_in_polygon(const Vec2& p, const Polygon& poly);

/// Closed containment of segment [a, b] in the polygon (touching the
/// boundary is allowed).
bool segment_in_polygon(const Vec2& a, const Vec2& b, const Polygon& poly);

/// Ear-clipping triangulation. Tolerates collinear vertices.
std::vector<std::array<Vec2, 3>> triangulate(const Polygon& poly);

/// A strictly interior point: the centroid of the first triangle of an
/// ear/fan triangulation.
Vec2 interior_point(const Polygon& poly);

/// Segment/segment meet. `kind` says whether they miss, meet in one point,
/// or overlap along a collinear stretch; t0/t1 are parameters on [a, b].
struct SegmentMeet {
  enum Kind { kNone, kPoint, kOverlap } kind = kNone;
  Rat t0, t1;
  Vec2 p0, p1;
};
SegmentMeet segment_meet(const Vec2& a, const Vec2& b, const Vec2& c,
                         const Vec2& d);

// Polygon text format: one vertex per line, "x_num/x_den y_num/y_den",
// counter-clockwise, '#' starts a comment.
Polygon load_polygon(std::istream& in);
Polygon load_polygon_file(const std::string& path);
void save_polygon(std::ostream& out, const Polygon& poly);
void save_polygon_file(const std::string& path, const Polygon& poly);

/// Orders the points around their centroid into a simple (star-shaped)
/// polygon. Fixture helper; duplicate points are rejected.
Polygon make_star_polygon(std::vector<Vec2> points);

}  // namespace fracthit::geom

#endif  // FRACTHIT_GEOMETRY_HPP_
