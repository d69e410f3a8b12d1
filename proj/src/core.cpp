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

#include "fracthit/core.hpp"

namespace fracthit {

Int sauer_shelah_bound(unsigned r, unsigned d) {
  Int total = 0;
  Int binom = 1;  // C(r, 0)
  const unsigned top = std::min(r, d);
  for (unsigned i = 0; i <= top; ++i) {
    total += binom;
    // C(r, i+1) = C(r, i) * (r - i) / (i + 1)
    binom *= r - i;
    binom /= i + 1;
  }
  return total;
}

}  // namespace fracthit
