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

#ifndef FRACTHIT_SVG_HPP_
#define FRACTHIT_SVG_HPP_

#include <string>
#include <vector>

#include "fracthit/cell_complex.hpp"

namespace fracthit::geom {

/// Renders the complex with cells shaded by depth (label size relative to
/// `depth_cap`, defaulting to the max label size) and marks the given
/// points as dots.
void write_svg(const std::string& path, const CellComplex& cx,
               const std::vector<Vec2>& marks = {}, int depth_cap = 0);

}  // namespace fracthit::geom

#endif  // FRACTHIT_SVG_HPP_
