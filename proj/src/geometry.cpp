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

#include "fracthit/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fracthit {

std::optional<Rat> parse_rat(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::string num = token, den = "1";
  auto slash = token.find('/');
  if (slash != std::string::npos) {
    num = token.substr(0, slash);
    den = token.substr(slash + 1);
  }
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat r;
  r = Rat(n) / Rat(d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace geom {

int orientation(const Vec2& o, const Vec2& a, const Vec2& b) {
  return sgn(cross(a - o, b - o));
}

bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (orientation(a, b, p) != 0) return false;
  return cmp(std::min(a.x, b.x), p.x) <= 0 && cmp(p.x, std::max(a.x, b.x)) <= 0 &&
         cmp(std::min(a.y, b.y), p.y) <= 0 && cmp(p.y, std::max(a.y, b.y)) <= 0;
}

Rat shoelace_area(const std::vector<Vec2>& ring) {
  Rat acc = 0;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return acc / 2;
}

Rat shoelace_area(const Polygon& poly) {
  if (poly.size() < 3) throw ValidationError("degenerate polygon: fewer than 3 vertices");
  return poly.area();
}

namespace {

// Closed-segment contact between two segments, boundary included.
bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

void validate_ring(const std::vector<Vec2>& vs) {
  const size_t n = vs.size();
  if (n < 3) throw ValidationError("polygon needs at least 3 vertices");
  for (size_t i = 0; i < n; ++i) {
    const Vec2& u = vs[(i + n - 1) % n];
    const Vec2& v = vs[i];
    const Vec2& w = vs[(i + 1) % n];
    if (v == w) throw ValidationError("polygon has a repeated vertex");
    if (orientation(u, v, w) == 0 && sgn(dot(v - u, w - v)) < 0)
      throw ValidationError("polygon has a spike vertex");
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_touch(vs[i], vs[(i + 1) % n], vs[j], vs[(j + 1) % n]))
        throw ValidationError("polygon boundary self-intersects");
    }
  }
}

}  // namespace

Polygon::Polygon(std::vector<Vec2> vs) {
  validate_ring(vs);
  Rat a = geom::shoelace_area(vs);
  if (a == 0) throw ValidationError("polygon has zero area");
  if (a < 0) {
    std::reverse(vs.begin(), vs.end());
    a = -a;
  }
  vs_ = std::move(vs);
  area_ = a;
}

Polygon Polygon::unchecked(std::vector<Vec2> vs) {
  Polygon p;
  Rat a = geom::shoelace_area(vs);
  if (a < 0) {
    std::reverse(vs.begin(), vs.end());
    a = -a;
  }
  p.vs_ = std::move(vs);
  p.area_ = a;
  return p;
}

Side point_in_polygon(const Vec2& p, const Polygon& poly) {
  const auto& vs = poly.vertices();
  const size_t n = vs.size();
  for (size_t i = 0; i < n; ++i)
    if (on_segment(p, vs[i], vs[(i + 1) % n])) return Side::kBoundary;
  bool in = false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = vs[i];
    const Vec2& b = vs[(i + 1) % n];
    bool a_below = cmp(a.y, p.y) <= 0;
    bool b_below = cmp(b.y, p.y) <= 0;
    if (a_below && !b_below) {  // upward crossing
      if (orientation(a, b, p) > 0) in = !in;
    } else if (!a_below && b_below) {  // downward crossing
      if (orientation(a, b, p) < 0) in = !in;
    }
  }
  return in ? Side::kInside : Side::kOutside;
}

SegmentMeet segment_meet(const Vec2& a, const Vec2& b, const Vec2& c,
                         const Vec2& d) {
  SegmentMeet out;
  const Vec2 u = b - a;
  const Vec2 v = d - c;
  const Rat denom = cross(u, v);
  if (denom != 0) {
    // a + t u = c + s v
    Rat t = cross(c - a, v) / denom;
    Rat s = cross(c - a, u) / denom;
    if (t < 0 || t > 1 || s < 0 || s > 1) return out;
    out.kind = SegmentMeet::kPoint;
    out.t0 = out.t1 = t;
    out.p0 = out.p1 = a + u * t;
    return out;
  }
  if (cross(c - a, u) != 0) return out;  // parallel, distinct lines
  // Collinear: project c and d onto [a, b].
  const Rat len2 = dot(u, u);
  if (len2 == 0) return out;  // degenerate input segment
  Rat tc = dot(c - a, u) / len2;
  Rat td = dot(d - a, u) / len2;
  Rat lo = std::min(tc, td), hi = std::max(tc, td);
  lo = std::max(lo, Rat(0));
  hi = std::min(hi, Rat(1));
  if (lo > hi) return out;
  out.kind = (lo == hi) ? SegmentMeet::kPoint : SegmentMeet::kOverlap;
  out.t0 = lo;
  out.t1 = hi;
  out.p0 = a + u * lo;
  out.p1 = a + u * hi;
  return out;
}

bool segment_in_polygon(const Vec2& a, const Vec2& b, const Polygon& poly) {
  if (point_in_polygon(a, poly) == Side::kOutside) return false;
  if (point_in_polygon(b, poly) == Side::kOutside) return false;
  if (a == b) return true;
  const auto& vs = poly.vertices();
  const size_t n = vs.size();
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (size_t i = 0; i < n; ++i) {
    const Vec2& c = vs[i];
    const Vec2& d = vs[(i + 1) % n];
    // A proper crossing of the boundary leaves the polygon.
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0)
      return false;
    SegmentMeet m = segment_meet(a, b, c, d);
    if (m.kind == SegmentMeet::kPoint) {
      cuts.push_back(m.t0);
    } else if (m.kind == SegmentMeet::kOverlap) {
      cuts.push_back(m.t0);
      cuts.push_back(m.t1);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const Vec2 u = b - a;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rat mid = (cuts[i] + cuts[i + 1]) / 2;
    if (point_in_polygon(a + u * mid, poly) == Side::kOutside) return false;
  }
  return true;
}

namespace {

// Closed triangle containment, used by the ear test.
bool point_in_triangle(const Vec2& p, const Vec2& a, const Vec2& b,
                       const Vec2& c) {
  int o1 = orientation(a, b, p);
  int o2 = orientation(b, c, p);
  int o3 = orientation(c, a, p);
  bool has_neg = (o1 < 0) || (o2 < 0) || (o3 < 0);
  bool has_pos = (o1 > 0) || (o2 > 0) || (o3 > 0);
  return !(has_neg && has_pos);
}

}  // namespace

std::vector<std::array<Vec2, 3>> triangulate(const Polygon& poly) {
  std::vector<Vec2> ring = poly.vertices();
  std::vector<std::array<Vec2, 3>> tris;
  tris.reserve(ring.size());
  while (ring.size() > 3) {
    const size_t n = ring.size();
    bool clipped = false;
    // Degenerate (collinear) vertices drop without emitting a triangle.
    for (size_t i = 0; i < n; ++i) {
      const Vec2& u = ring[(i + n - 1) % n];
      const Vec2& v = ring[i];
      const Vec2& w = ring[(i + 1) % n];
      if (orientation(u, v, w) == 0) {
        ring.erase(ring.begin() + static_cast<long>(i));
        clipped = true;
        break;
      }
    }
    if (clipped) continue;
    for (size_t i = 0; i < n && !clipped; ++i) {
      const Vec2& u = ring[(i + n - 1) % n];
      const Vec2& v = ring[i];
      const Vec2& w = ring[(i + 1) % n];
      if (orientation(u, v, w) <= 0) continue;  // reflex
      bool blocked = false;
      for (size_t j = 0; j < n && !blocked; ++j) {
        if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
        if (point_in_triangle(ring[j], u, v, w)) blocked = true;
      }
      if (blocked) continue;
      tris.push_back({u, v, w});
      ring.erase(ring.begin() + static_cast<long>(i));
      clipped = true;
    }
    if (!clipped) throw Error("triangulation failed: no ear found (non-simple input?)");
  }
  if (ring.size() == 3 && orientation(ring[0], ring[1], ring[2]) != 0)
    tris.push_back({ring[0], ring[1], ring[2]});
  if (tris.empty()) throw ValidationError("cannot triangulate a degenerate polygon");
  return tris;
}

Vec2 interior_point(const Polygon& poly) {
  auto tris = triangulate(poly);
  const auto& t = tris.front();
  return Vec2((t[0].x + t[1].x + t[2].x) / 3, (t[0].y + t[1].y + t[2].y) / 3);
}

Polygon load_polygon(std::istream& in) {
  std::vector<Vec2> vs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs)) continue;  // blank
    if (!(ls >> ys)) throw ParseError("expected two coordinates", lineno);
    if (ls >> extra) throw ParseError("trailing tokens after vertex", lineno);
    auto x = parse_rat(xs);
    auto y = parse_rat(ys);
    if (!x || !y) throw ParseError("bad rational coordinate", lineno);
    vs.emplace_back(*x, *y);
  }
  if (vs.size() < 3) throw ParseError("polygon needs at least 3 vertices", lineno);
  try {
    return Polygon(std::move(vs));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), lineno);
  }
}

Polygon load_polygon_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open polygon file: " + path);
  return load_polygon(f);
}

void save_polygon(std::ostream& out, const Polygon& poly) {
  for (const auto& v : poly.vertices())
    out << format_rat(v.x) << " " << format_rat(v.y) << "\n";
}

void save_polygon_file(const std::string& path, const Polygon& poly) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open file for writing: " + path);
  save_polygon(f, poly);
}

Polygon make_star_polygon(std::vector<Vec2> points) {
  if (points.size() < 3) throw ValidationError("need at least 3 points");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw ValidationError("duplicate points");
  Vec2 c(0, 0);
  for (const auto& p : points) c = c + p;
  c = Vec2(c.x / static_cast<long>(points.size()),
           c.y / static_cast<long>(points.size()));
  auto half = [&](const Vec2& p) {
    Vec2 d = p - c;
    if (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) return 0;
    return 1;
  };
  std::sort(points.begin(), points.end(), [&](const Vec2& a, const Vec2& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cr = cross(a - c, b - c);
    if (cr != 0) return cr > 0;
    // Same ray from the centroid: nearer point first.
    return dot(a - c, a - c) < dot(b - c, b - c);
  });
  return Polygon(std::move(points));
}

}  // namespace geom
}  // namespace fracthit
