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

#ifndef FRACTHIT_CORE_HPP_
#define FRACTHIT_CORE_HPP_

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "fracthit/errors.hpp"
#include "fracthit/rational.hpp"

namespace fracthit {

using Rng = std::mt19937_64;

// Range-space contract shared by every solver and instantiation:
//   * points are an adapter-chosen value type (index or exact 2D point);
//   * ranges are addressed by adapter-owned opaque ids; enumeration is an
//     optional capability, so infinite families stay first class;
//   * the base measure w0 on ranges is finite and positive;
//   * growth: the number of distinct traces of any finite point set P is
//     at most |P|^gamma;
//   * an integral optimum exists and is at most opt_upper_bound.
// Masses and measures are doubles; combinatorial counts are exact.

/// g(r, d) = sum_{i=0..min(d,r)} C(r, i): the maximum number of distinct
/// traces of an r-point set in a range space of VC-dimension d.
Int sauer_shelah_bound(unsigned r, unsigned d);

/// Measured quality of a fractional solution: mass ratio alpha >= 1 against
/// a reference optimum, and the satisfied measure fraction beta in [0, 1].
struct ApproxQuality {
  double alpha = 1.0;
  double beta = 1.0;
  bool alpha_ok = true;
  bool beta_ok = true;
  bool ok() const { return alpha_ok && beta_ok; }
};

/// Finite-support measure on points. Masses are strictly positive; entries
/// that would round to zero are dropped at construction.
template <class P>
struct FractionalSolution {
  std::vector<std::pair<P, double>> support;
  double total_mass = 0.0;
};

/// Builds the returned measure of the covering loop: mass(p) =
/// multiplicity(p) / T over the chosen multiset.
template <class P>
FractionalSolution<P> solution_from_multiset(const std::vector<P>& chosen,
                                             long T) {
  if (T <= 0) throw ValidationError("T must be positive");
  std::map<P, long> mult;
  for (const auto& p : chosen) ++mult[p];
  FractionalSolution<P> out;
  out.support.reserve(mult.size());
  for (const auto& [p, k] : mult)
    out.support.emplace_back(p, static_cast<double>(k) / static_cast<double>(T));
  out.total_mass =
      static_cast<double>(chosen.size()) / static_cast<double>(T);
  return out;
}

/// Mass comparisons tolerate accumulated float error of this relative size;
/// the analysis tolerances (eps, delta, omega) dominate it by far.
inline constexpr double kMassSlack = 1e-9;

/// Result of a feasibility check: the w0-fraction of ranges with
/// mu(R) >= 1, plus one violated range when below the target.
template <class RangeRef>
struct FeasibilityReport {
  double feasible_mass_fraction = 0.0;
  std::optional<RangeRef> witness_violated;
};

}  // namespace fracthit

#endif  // FRACTHIT_CORE_HPP_
