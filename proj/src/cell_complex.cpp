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

#include "fracthit/cell_complex.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace fracthit::geom {

std::vector<int> Cell::label_set() const {
  std::vector<int> out;
  for (size_t w = 0; w < label.size(); ++w) {
    uint64_t bits = label[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.push_back(static_cast<int>(64 * w) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

namespace detail {

double rand01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

size_t pick_weighted(const std::vector<double>& weights, Rng& rng) {
  double total = 0;
  for (double w : weights) total += w;
  if (!(total > 0)) throw Error("pick_weighted: zero total weight");
  double r = rand01(rng) * total;
  double acc = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (r < acc) return i;
  }
  for (size_t i = weights.size(); i-- > 0;)
    if (weights[i] > 0) return i;
  throw Error("pick_weighted: unreachable");
}

namespace {

struct RingVertex {
  Vec2 p;
  int side;  // sign of cross(lb - la, p - la)
};

}  // namespace

// Each side's pieces form the cycles of a 1-regular digraph whose edges are
//   * ring edges staying on the closed side (pure on-line edges belong to
//     the side on their left, i.e. the ring direction decides), and
//   * "cut" edges between consecutive on-line boundary points whose open
//     gap is interior, directed so the piece interior stays on the left.
std::pair<std::vector<Polygon>, std::vector<Polygon>> split_by_line(
    const Polygon& poly, const Vec2& la, const Vec2& lb) {
  const Vec2 dir = lb - la;
  const auto& vs = poly.vertices();
  const size_t n = vs.size();

  auto side_of = [&](const Vec2& p) { return sgn(cross(dir, p - la)); };

  bool any_pos = false, any_neg = false;
  for (const auto& v : vs) {
    int s = side_of(v);
    any_pos |= s > 0;
    any_neg |= s < 0;
  }
  if (!any_neg) return {{poly}, {}};
  if (!any_pos) return {{}, {poly}};

  // Insert every boundary/line crossing as an explicit ring vertex, so no
  // ring edge changes strict side.
  std::vector<RingVertex> ring;
  ring.reserve(n + 8);
  for (size_t i = 0; i < n; ++i) {
    const Vec2& u = vs[i];
    const Vec2& w = vs[(i + 1) % n];
    int su = side_of(u), sw = side_of(w);
    ring.push_back({u, su});
    if (su * sw < 0) {
      Rat t = cross(dir, la - u) / cross(dir, w - u);
      ring.push_back({u + (w - u) * t, 0});
    }
  }
  const size_t m = ring.size();

  // On-line vertices ordered along the line.
  std::vector<size_t> nodes;
  for (size_t i = 0; i < m; ++i)
    if (ring[i].side == 0) nodes.push_back(i);
  std::sort(nodes.begin(), nodes.end(), [&](size_t a, size_t b) {
    return dot(ring[a].p - la, dir) < dot(ring[b].p - la, dir);
  });
  std::vector<size_t> order_of(m, SIZE_MAX);
  for (size_t k = 0; k < nodes.size(); ++k) order_of[nodes[k]] = k;

  std::vector<bool> gap_interior(nodes.size() ? nodes.size() - 1 : 0, false);
  for (size_t k = 0; k + 1 < nodes.size(); ++k) {
    const Vec2& a = ring[nodes[k]].p;
    const Vec2& b = ring[nodes[k + 1]].p;
    Vec2 mid((a.x + b.x) / 2, (a.y + b.y) / 2);
    gap_interior[k] = point_in_polygon(mid, poly) == Side::kInside;
  }

  auto extract = [&](int want) {
    struct DEdge {
      size_t from, to;
      bool used = false;
    };
    std::vector<DEdge> edges;
    for (size_t i = 0; i < m; ++i) {
      size_t j = (i + 1) % m;
      int si = ring[i].side * want;
      int sj = ring[j].side * want;
      if (si < 0 || sj < 0) continue;
      if (si == 0 && sj == 0) {
        // On-line ring edge: belongs to the side on its interior (the left
        // of the ring direction).
        if (sgn(dot(ring[j].p - ring[i].p, dir)) * want > 0)
          edges.push_back({i, j});
        continue;
      }
      edges.push_back({i, j});
    }
    for (size_t k = 0; k + 1 < nodes.size(); ++k) {
      if (!gap_interior[k]) continue;
      // Piece interior on the left of travel: ascending on the left side.
      if (want > 0)
        edges.push_back({nodes[k], nodes[k + 1]});
      else
        edges.push_back({nodes[k + 1], nodes[k]});
    }

    std::vector<std::vector<size_t>> out_at(m);
    for (size_t e = 0; e < edges.size(); ++e) out_at[edges[e].from].push_back(e);

    // Face walk: from the reversed incoming direction pick the outgoing
    // edge with the smallest clockwise rotation. Handles vertices pinched
    // between two pieces.
    auto next_edge = [&](size_t at, const Vec2& d_in) -> size_t {
      const Vec2 r(-d_in.x, -d_in.y);
      auto bucket = [&](const Vec2& d) {
        Rat cr = cross(r, d);
        int s = sgn(cr);
        if (s < 0) return 0;           // strictly clockwise side
        if (s > 0) return 2;           // counter-clockwise side
        return sgn(dot(r, d)) < 0 ? 1  // straight through
                                  : 3; // full U-turn, last resort
      };
      size_t best = SIZE_MAX;
      Vec2 bestd;
      int bestb = 4;
      for (size_t e : out_at[at]) {
        Vec2 d = ring[edges[e].to].p - ring[edges[e].from].p;
        int b = bucket(d);
        bool better;
        if (best == SIZE_MAX || b != bestb)
          better = b < bestb;
        else if (b == 0 || b == 2)
          better = cross(d, bestd) < 0;
        else
          better = false;
        if (better) {
          best = e;
          bestd = d;
          bestb = b;
        }
      }
      if (best == SIZE_MAX) throw Error("split_by_line: dead-end boundary walk");
      return best;
    };

    std::vector<Polygon> pieces;
    for (size_t e0 = 0; e0 < edges.size(); ++e0) {
      if (edges[e0].used) continue;
      std::vector<Vec2> out;
      size_t e = e0;
      size_t guard = 0;
      while (true) {
        edges[e].used = true;
        out.push_back(ring[edges[e].from].p);
        Vec2 d_in = ring[edges[e].to].p - ring[edges[e].from].p;
        size_t nx = next_edge(edges[e].to, d_in);
        if (nx == e0) break;
        if (edges[nx].used) throw Error("split_by_line: walk crossed itself");
        e = nx;
        if (++guard > edges.size() + 1)
          throw Error("split_by_line: walk does not close");
      }
      std::vector<Vec2> clean;
      for (const auto& p : out)
        if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
      while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
      if (clean.size() >= 3 && shoelace_area(clean) != 0)
        pieces.push_back(Polygon::unchecked(std::move(clean)));
    }
    return pieces;
  };

  auto left = extract(+1);
  auto right = extract(-1);

  Rat sum = 0;
  for (const auto& p : left) sum += p.area();
  for (const auto& p : right) sum += p.area();
  if (sum != poly.area()) throw Error("split_by_line: area not conserved");
  return {std::move(left), std::move(right)};
}

}  // namespace detail

CellComplex::CellComplex(Polygon master) : master_(std::move(master)) {
  Cell c;
  c.poly = master_;
  c.area = master_.area();
  cells_.push_back(std::move(c));
}

int CellComplex::add_generator(const Polygon& g) {
  const int id = num_generators_++;
  const size_t need_words = static_cast<size_t>(id) / 64 + 1;
  if (need_words > label_words_) label_words_ = need_words;

  const auto& gvs = g.vertices();
  for (size_t e = 0; e < gvs.size(); ++e) {
    const Vec2& a = gvs[e];
    const Vec2& b = gvs[(e + 1) % gvs.size()];
    std::vector<Cell> next;
    next.reserve(cells_.size());
    for (auto& cell : cells_) {
      // Split only cells whose interior the segment actually crosses:
      // vertices strictly on both sides of the supporting line, and the
      // segment touches the cell.
      bool pos = false, neg = false;
      for (const auto& v : cell.poly.vertices()) {
        int s = orientation(a, b, v);
        pos |= s > 0;
        neg |= s < 0;
        if (pos && neg) break;
      }
      bool crossed = pos && neg;
      if (crossed) {
        bool touches = point_in_polygon(a, cell.poly) != Side::kOutside ||
                       point_in_polygon(b, cell.poly) != Side::kOutside;
        if (!touches) {
          const auto& cvs = cell.poly.vertices();
          for (size_t i = 0; i < cvs.size() && !touches; ++i) {
            auto meet = segment_meet(a, b, cvs[i], cvs[(i + 1) % cvs.size()]);
            touches = meet.kind != SegmentMeet::kNone;
          }
        }
        crossed = touches;
      }
      if (!crossed) {
        next.push_back(std::move(cell));
        continue;
      }
      auto [lhs, rhs] = detail::split_by_line(cell.poly, a, b);
      for (auto* group : {&lhs, &rhs}) {
        for (auto& piece : *group) {
          Cell nc;
          nc.area = piece.area();
          nc.poly = std::move(piece);
          nc.label = cell.label;
          next.push_back(std::move(nc));
        }
      }
    }
    cells_ = std::move(next);
  }

  for (auto& cell : cells_) {
    cell.label.resize(label_words_, 0);
    Vec2 probe = interior_point(cell.poly);
    if (point_in_polygon(probe, g) != Side::kOutside)
      cell.label[static_cast<size_t>(id) / 64] |= uint64_t{1} << (id % 64);
  }
  return id;
}

Rat CellComplex::total_area() const {
  Rat sum = 0;
  for (const auto& c : cells_) sum += c.area;
  return sum;
}

CellComplex overlay(const Polygon& master, const std::vector<Polygon>& generators) {
  CellComplex cx(master);
  for (const auto& g : generators) cx.add_generator(g);
  return cx;
}

std::vector<std::vector<int>> subsystem_traces(const CellComplex& cx) {
  std::vector<std::vector<int>> out;
  out.reserve(cx.cells().size());
  for (const auto& c : cx.cells()) out.push_back(c.label_set());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double weighted_area(const CellComplex& cx,
                     const std::function<double(const Cell&)>& weight) {
  double acc = 0;
  for (const auto& c : cx.cells()) acc += weight(c) * to_double(c.area);
  return acc;
}

Vec2 sample_point_in_complex(const CellComplex& cx,
                             const std::function<double(const Cell&)>& weight,
                             Rng& rng) {
  std::vector<double> w;
  w.reserve(cx.cells().size());
  for (const auto& c : cx.cells()) {
    double wc = weight(c) * to_double(c.area);
    if (!(wc >= 0)) throw Error("sample_point_in_complex: negative weight");
    w.push_back(wc);
  }
  double total = 0;
  for (double x : w) total += x;
  if (!(total > 0)) throw Error("sample_point_in_complex: zero total weight");
  const Cell& cell = cx.cells()[detail::pick_weighted(w, rng)];

  auto tris = triangulate(cell.poly);
  std::vector<double> ta;
  ta.reserve(tris.size());
  for (const auto& t : tris)
    ta.push_back(std::abs(to_double(shoelace_area({t[0], t[1], t[2]}))));
  const auto& tri = tris[detail::pick_weighted(ta, rng)];

  // Uniform barycentric draw with exact rational multipliers.
  auto rat53 = [&](Rng& r) {
    return Rat(static_cast<unsigned long>(r() >> 11)) / Rat(Int(1) << 53);
  };
  Rat r1 = rat53(rng), r2 = rat53(rng);
  if (r1 + r2 > 1) {
    r1 = 1 - r1;
    r2 = 1 - r2;
  }
  Vec2 p = tri[0] + (tri[1] - tri[0]) * r1 + (tri[2] - tri[0]) * r2;
  return p;
}

}  // namespace fracthit::geom
