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

#include "fracthit/svg.hpp"

#include <algorithm>
#include <fstream>

namespace fracthit::geom {

void write_svg(const std::string& path, const CellComplex& cx,
               const std::vector<Vec2>& marks, int depth_cap) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open svg output: " + path);

  double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
  for (const auto& v : cx.master().vertices()) {
    minx = std::min(minx, to_double(v.x));
    maxx = std::max(maxx, to_double(v.x));
    miny = std::min(miny, to_double(v.y));
    maxy = std::max(maxy, to_double(v.y));
  }
  const double w = std::max(maxx - minx, 1e-9), h = std::max(maxy - miny, 1e-9);
  const double scale = 640.0 / std::max(w, h);
  auto X = [&](const Rat& x) { return (to_double(x) - minx) * scale + 10; };
  auto Y = [&](const Rat& y) { return (maxy - to_double(y)) * scale + 10; };

  int cap = depth_cap;
  if (cap <= 0)
    for (const auto& c : cx.cells())
      cap = std::max<int>(cap, static_cast<int>(c.label_set().size()));
  if (cap <= 0) cap = 1;

  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (w * scale + 20)
    << "\" height=\"" << (h * scale + 20) << "\">\n";
  for (const auto& c : cx.cells()) {
    const int depth = static_cast<int>(c.label_set().size());
    const int shade =
        255 - static_cast<int>(200.0 * std::min(depth, cap) / cap);
    f << "<path d=\"";
    const auto& vs = c.poly.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
      f << (i == 0 ? 'M' : 'L') << X(vs[i].x) << ' ' << Y(vs[i].y) << ' ';
    f << "Z\" fill=\"rgb(" << shade << ',' << shade << ",255)\" stroke=\"#888\" "
      << "stroke-width=\"0.5\"/>\n";
  }
  const auto& mb = cx.master().vertices();
  f << "<path d=\"";
  for (size_t i = 0; i < mb.size(); ++i)
    f << (i == 0 ? 'M' : 'L') << X(mb[i].x) << ' ' << Y(mb[i].y) << ' ';
  f << "Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : marks)
    f << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y)
      << "\" r=\"3.5\" fill=\"#c00\"/>\n";
  f << "</svg>\n";
}

}  // namespace fracthit::geom
