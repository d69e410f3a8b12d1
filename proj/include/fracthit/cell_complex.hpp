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

#ifndef FRACTHIT_CELL_COMPLEX_HPP_
#define FRACTHIT_CELL_COMPLEX_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fracthit/geometry.hpp"

namespace fracthit::geom {

using Rng = std::mt19937_64;

/// One face of the subdivision. `label` is a bitset over generator ids;
/// the label is constant over the whole cell.
struct Cell {
  Polygon poly;
  Rat area;
  std::vector<uint64_t> label;

  bool has(int gen) const {
    size_t w = static_cast<size_t>(gen) / 64;
    return w < label.size() && (label[w] >> (gen % 64)) & 1;
  }
  std::vector<int> label_set() const;
};

/// Planar subdivision of a master polygon induced by generator polygons,
/// built by iterated clipping: each generator edge splits exactly the cells
/// whose interior it crosses. Cell order is deterministic (creation order).
class CellComplex {
 public:
  explicit CellComplex(Polygon master);

  /// Overlays one generator (must be contained in the master). Returns its id.
  int add_generator(const Polygon& g);

  const Polygon& master() const { return master_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int num_generators() const { return num_generators_; }

  /// Exact sum of cell areas; equals master().area() by construction.
  Rat total_area() const;

 private:
  Polygon master_;
  std::vector<Cell> cells_;
  int num_generators_ = 0;
  size_t label_words_ = 0;
};

CellComplex overlay(const Polygon& master, const std::vector<Polygon>& generators);

/// Distinct cell labels as sorted id lists, in lexicographic order. This is
/// the subsystem projection of the generators onto the master.
std::vector<std::vector<int>> subsystem_traces(const CellComplex& cx);

/// Sum over cells of weight(cell) * area(cell), in double precision.
double weighted_area(const CellComplex& cx,
                     const std::function<double(const Cell&)>& weight);

/// Picks a cell with probability proportional to weight * area, then a
/// uniform point inside it (triangle by area, then barycentric).
Vec2 sample_point_in_complex(const CellComplex& cx,
                             const std::function<double(const Cell&)>& weight,
                             Rng& rng);

namespace detail {

/// Splits a simple polygon by the oriented line through (la, lb).
/// first: pieces strictly on the left; second: strictly on the right.
/// Pieces are simple and their areas sum exactly to the input area.
std::pair<std::vector<Polygon>, std::vector<Polygon>> split_by_line(
    const Polygon& poly, const Vec2& la, const Vec2& lb);

/// Uniform draw from [0, 1) with 53 random bits; deterministic across
/// standard libraries (unlike std::uniform_real_distribution).
double rand01(Rng& rng);

/// Index draw proportional to nonnegative weights (at least one positive).
size_t pick_weighted(const std::vector<double>& weights, Rng& rng);

}  // namespace detail

}  // namespace fracthit::geom

#endif  // FRACTHIT_CELL_COMPLEX_HPP_
