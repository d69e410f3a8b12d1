#include <sstream>

#include "doctest.h"
#include "fracthit/geometry.hpp"

using namespace fracthit;
using namespace fracthit::geom;

namespace {

Polygon unit_square() {
  return Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Lower rect [0,2]x[0,1] plus upper arm [0,1]x[1,2]; reflex corner at (1,1).
Polygon l_shape() {
  return Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("shoelace area basics") {
  CHECK(shoelace_area(unit_square()) == Rat(1));
  Polygon tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(shoelace_area(tri) == Rat(1, 2));

  // Orientation flip negates the raw ring area.
  std::vector<Vec2> ring = {{0, 0}, {1, 0}, {0, 1}};
  std::vector<Vec2> rev(ring.rbegin(), ring.rend());
  CHECK(shoelace_area(ring) == -shoelace_area(rev));

  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}}), ValidationError);
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), ValidationError);
  // Bowtie self-intersects.
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), ValidationError);
  // Zero area.
  CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {2, 0}}), ValidationError);
  // Clockwise input is normalized to CCW.
  Polygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(shoelace_area(p) == Rat(1));
  CHECK(p.vertices().size() == 4);
}

TEST_CASE("point in polygon") {
  Polygon sq = unit_square();
  CHECK(point_in_polygon(Vec2(Rat(1, 2), Rat(1, 2)), sq) == Side::kInside);
  CHECK(point_in_polygon(Vec2(Rat(1, 2), Rat(0)), sq) == Side::kBoundary);
  CHECK(point_in_polygon(Vec2(0, 0), sq) == Side::kBoundary);
  CHECK(point_in_polygon(Vec2(2, 0), sq) == Side::kOutside);
  CHECK(point_in_polygon(Vec2(Rat(1, 2), Rat(3, 2)), sq) == Side::kOutside);

  Polygon l = l_shape();
  CHECK(point_in_polygon(Vec2(Rat(3, 2), Rat(1, 2)), l) == Side::kInside);
  CHECK(point_in_polygon(Vec2(Rat(3, 2), Rat(3, 2)), l) == Side::kOutside);
  CHECK(point_in_polygon(Vec2(1, 1), l) == Side::kBoundary);
}

TEST_CASE("segment in polygon handles the reflex corner") {
  Polygon l = l_shape();
  // Blocked: crosses the wall x = 1 above the corner.
  CHECK_FALSE(segment_in_polygon(Vec2(Rat(1, 4), Rat(7, 4)),
                                 Vec2(Rat(7, 4), Rat(3, 4)), l));
  CHECK_FALSE(segment_in_polygon(Vec2(Rat(1, 2), Rat(7, 4)),
                                 Vec2(Rat(7, 4), Rat(1, 4)), l));
  // Pivoting exactly on the reflex corner stays inside (boundary counts).
  CHECK(segment_in_polygon(Vec2(Rat(1, 4), Rat(7, 4)), Vec2(Rat(7, 4), Rat(1, 4)), l));
  CHECK(segment_in_polygon(Vec2(Rat(1, 4), Rat(7, 4)), Vec2(Rat(1, 4), Rat(1, 4)), l));
  CHECK(segment_in_polygon(Vec2(0, 0), Vec2(2, 0), l));  // along the boundary
  CHECK(segment_in_polygon(Vec2(1, 1), Vec2(1, 1), l));
}

TEST_CASE("segment meet cases") {
  auto m = segment_meet({0, 0}, {2, 2}, {0, 2}, {2, 0});
  CHECK(m.kind == SegmentMeet::kPoint);
  CHECK(m.p0 == Vec2(1, 1));
  m = segment_meet({0, 0}, {1, 0}, {0, 1}, {1, 1});
  CHECK(m.kind == SegmentMeet::kNone);
  m = segment_meet({0, 0}, {2, 0}, {1, 0}, {3, 0});
  CHECK(m.kind == SegmentMeet::kOverlap);
  CHECK(m.t0 == Rat(1, 2));
  CHECK(m.t1 == Rat(1));
  m = segment_meet({0, 0}, {2, 0}, {2, 0}, {3, 0});
  CHECK(m.kind == SegmentMeet::kPoint);
  CHECK(m.p0 == Vec2(2, 0));
}

TEST_CASE("triangulation covers the polygon exactly") {
  for (const Polygon& p : {unit_square(), l_shape(),
                           Polygon({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 3}, {3, 3},
                                    {3, 4}, {0, 4}})}) {
    auto tris = triangulate(p);
    Rat sum = 0;
    for (const auto& t : tris) {
      Rat a = shoelace_area({t[0], t[1], t[2]});
      CHECK(a > 0);
      sum += a;
    }
    CHECK(sum == p.area());
  }
}

TEST_CASE("interior point is strictly inside") {
  for (const Polygon& p : {unit_square(), l_shape()}) {
    Vec2 q = interior_point(p);
    CHECK(point_in_polygon(q, p) == Side::kInside);
  }
  Polygon tri({{0, 0}, {3, 0}, {0, 3}});
  CHECK(interior_point(tri) == Vec2(1, 1));  // centroid
}

TEST_CASE("polygon file round trip and parse errors") {
  Polygon l = l_shape();
  std::stringstream ss;
  save_polygon(ss, l);
  Polygon back = load_polygon(ss);
  CHECK(back.vertices() == l.vertices());

  std::stringstream bad1("0/1 0/1\n1/1\n0/1 1/1\n");
  CHECK_THROWS_AS(load_polygon(bad1), ParseError);
  std::stringstream bad2("0/1 0/1\nx 1/1\n0/1 1/1\n");
  CHECK_THROWS_AS(load_polygon(bad2), ParseError);
  std::stringstream bad3("# just a comment\n");
  CHECK_THROWS_AS(load_polygon(bad3), ParseError);
  std::stringstream ok("# comment\n0 0\n2 0 # inline\n1 2\n");
  Polygon tri = load_polygon(ok);
  CHECK(tri.area() == Rat(2));
}

TEST_CASE("rational parsing") {
  CHECK(*parse_rat("3/4") == Rat(3, 4));
  CHECK(*parse_rat("-6/8") == Rat(-3, 4));
  CHECK(*parse_rat("5") == Rat(5));
  CHECK(!parse_rat("1/0"));
  CHECK(!parse_rat("a/b"));
  CHECK(!parse_rat(""));
  CHECK(format_rat(Rat(6, 8)) == "3/4");
  CHECK(format_rat(Rat(-2)) == "-2/1");
}

TEST_CASE("star polygon fixture helper") {
  std::vector<Vec2> pts = {{0, 0}, {4, 0}, {4, 3}, {0, 3}, {2, 5}};
  Polygon p = make_star_polygon(pts);
  CHECK(p.size() == 5);
  CHECK(p.area() > 0);
  CHECK_THROWS_AS(make_star_polygon({{0, 0}, {1, 1}, {0, 0}}), ValidationError);
}
