#include <random>

#include "doctest.h"
#include "fracthit/visibility.hpp"

using namespace fracthit;
using namespace fracthit::geom;

namespace {

Polygon l_shape() {
  return Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

// Independent double-precision check of "p sees q" used as a Monte Carlo
// oracle: walks the segment in small steps and tests each step point with
// a crossing-number routine written separately from the exact kernel.
bool mc_point_inside(double x, double y, const Polygon& H) {
  const auto& vs = H.vertices();
  bool in = false;
  size_t n = vs.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    double xi = to_double(vs[i].x), yi = to_double(vs[i].y);
    double xj = to_double(vs[j].x), yj = to_double(vs[j].y);
    if ((yi > y) != (yj > y)) {
      double t = (y - yi) / (yj - yi);
      if (x < xi + t * (xj - xi)) in = !in;
    }
  }
  return in;
}

bool mc_sees(double qx, double qy, double px, double py, const Polygon& H) {
  const int steps = 64;
  for (int s = 1; s < steps; ++s) {
    double t = static_cast<double>(s) / steps;
    if (!mc_point_inside(qx + t * (px - qx), qy + t * (py - qy), H))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("convex polygon is fully visible from any interior point") {
  Polygon sq({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  for (Vec2 q : {Vec2(1, 1), Vec2(Rat(1, 3), Rat(7, 2)), Vec2(2, 2)}) {
    Polygon v = visibility_polygon(sq, q);
    CHECK(v.area() == sq.area());
  }
  // From a corner too.
  CHECK(visibility_polygon(sq, Vec2(0, 0)).area() == sq.area());
}

TEST_CASE("L-shape visibility from the kernel is everything") {
  Polygon l = l_shape();
  Polygon v = visibility_polygon(l, Vec2(Rat(1, 4), Rat(1, 4)));
  CHECK(v.area() == Rat(3));
}

TEST_CASE("L-shape visibility from the right arm loses the shadow triangle") {
  Polygon l = l_shape();
  Vec2 q(Rat(7, 4), Rat(1, 4));
  Polygon v = visibility_polygon(l, q);
  // Shadow of the reflex corner (1,1) is the triangle (1,1),(1,2),(0,2),
  // so the visible area is 3 - 1/2.
  CHECK(v.area() == Rat(5, 2));
  CHECK(point_in_polygon(q, v) != Side::kOutside);
  // Strictly inside the shadow triangle of the reflex corner.
  CHECK(point_in_polygon(Vec2(Rat(1, 2), Rat(7, 4)), v) == Side::kOutside);
  // The window edge itself (through the corner) still counts as visible.
  CHECK(point_in_polygon(Vec2(Rat(1, 4), Rat(7, 4)), v) == Side::kBoundary);

  // Monte Carlo cross-check of the same area, +-1e-2.
  std::mt19937_64 rng(7);
  auto rnd = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };
  int inside = 0, visible = 0;
  const int trials = 200000;
  for (int i = 0; i < trials; ++i) {
    double x = rnd(0, 2), y = rnd(0, 2);
    if (!mc_point_inside(x, y, l)) continue;
    ++inside;
    if (mc_sees(1.75, 0.25, x, y, l)) ++visible;
  }
  double est = 4.0 * visible / trials;  // bounding box area 4
  CHECK(est == doctest::Approx(2.5).epsilon(0.01));
  CHECK(inside > 0);
}

TEST_CASE("query at the reflex vertex sees both arms") {
  Polygon l = l_shape();
  Polygon v = visibility_polygon(l, Vec2(1, 1));
  CHECK(v.area() == Rat(3));
}

TEST_CASE("query outside errors") {
  Polygon l = l_shape();
  CHECK_THROWS_AS(visibility_polygon(l, Vec2(Rat(3, 2), Rat(3, 2))),
                  ValidationError);
}

TEST_CASE("visibility agrees with the exact segment membership oracle") {
  std::mt19937_64 rng(42);
  auto rnd_int = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  for (int iter = 0; iter < 20; ++iter) {
    // Random star-shaped polygon on a jittered circle (exact coordinates).
    std::vector<Vec2> pts;
    int n = 5 + iter % 4;
    for (int i = 0; i < n; ++i) {
      // Angle slots around a circle of radius ~8 with jitter, snapped to
      // quarter-integer coordinates so everything stays exact.
      double ang = 2 * 3.14159265358979 * (i + 0.1) / n;
      long r = rnd_int(16, 32);
      long x = static_cast<long>(r * std::cos(ang));
      long y = static_cast<long>(r * std::sin(ang));
      pts.emplace_back(Rat(x, 4), Rat(y, 4));
    }
    Polygon H;
    try {
      H = make_star_polygon(pts);
    } catch (const ValidationError&) {
      continue;  // degenerate draw
    }
    Vec2 q = interior_point(H);
    Polygon vis = visibility_polygon(H, q);
    CHECK(point_in_polygon(q, vis) != Side::kOutside);
    CHECK(vis.area() <= H.area());
    // Sample points: in vis <=> segment [q, p] inside H.
    for (int s = 0; s < 40; ++s) {
      Vec2 p(Rat(rnd_int(-36, 36), 4), Rat(rnd_int(-36, 36), 4));
      if (point_in_polygon(p, H) == Side::kOutside) continue;
      bool sees = segment_in_polygon(q, p, H);
      bool in_vis = point_in_polygon(p, vis) != Side::kOutside;
      CHECK(sees == in_vis);
    }
  }
}
