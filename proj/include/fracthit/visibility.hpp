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

#ifndef FRACTHIT_VISIBILITY_HPP_
#define FRACTHIT_VISIBILITY_HPP_

#include "fracthit/geometry.hpp"

namespace fracthit::geom {

/// The star-shaped region of `polygon` visible from `q` along interior
/// segments (boundary contact allowed). `q` must lie in the closed polygon.
///
/// Runs an exact angular sweep: the directions to all vertices (plus eight
/// compass fills) split the circle into sectors on which the nearest edge
/// is constant, probed with the rational mid-direction d1 + d2.
Polygon visibility_polygon(const Polygon& polygon, const Vec2& q);

}  // namespace fracthit::geom

#endif  // FRACTHIT_VISIBILITY_HPP_
