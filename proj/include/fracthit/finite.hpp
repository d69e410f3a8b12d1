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

#ifndef FRACTHIT_FINITE_HPP_
#define FRACTHIT_FINITE_HPP_

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "fracthit/core.hpp"

namespace fracthit {

using Rng = std::mt19937_64;

/// Explicit finite range space: indexed points, ranges as sorted index
/// sets, positive range weights. Immutable after construction; also the
/// ground truth backend for every probabilistic claim in the test suite.
class FiniteInstance {
 public:
  FiniteInstance(int num_points, std::vector<std::vector<int>> ranges,
                 std::vector<double> weights);

  int num_points() const { return num_points_; }
  int num_ranges() const { return static_cast<int>(ranges_.size()); }
  const std::vector<int>& range(int r) const { return ranges_[r]; }
  double weight(int r) const { return weights_[r]; }
  const std::vector<int>& ranges_of_point(int p) const { return point_ranges_[p]; }
  double total_weight() const { return total_weight_; }

  bool contains(int range_id, int point) const;

  /// Distinct traces {R cap P}, each a sorted subset of P.
  std::vector<std::vector<int>> subsystem(const std::vector<int>& points) const;

  /// Smallest gamma with min(2^r, m) <= r^gamma for every r >= 2; a valid
  /// growth exponent for any instance with m ranges.
  double growth_exponent() const { return gamma_; }

  long opt_upper_bound() const { return opt_upper_; }
  void set_opt_upper_bound(long n);

  /// Exact VC-dimension (largest shattered point set), computed lazily.
  int vc_dim() const;
  /// Exact VC-dimension of the dual range space (roles swapped).
  int dual_vc_dim() const;

 private:
  int num_points_;
  std::vector<std::vector<int>> ranges_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> point_ranges_;
  double total_weight_;
  double gamma_;
  long opt_upper_;
  mutable int vc_dim_ = -1;
  mutable int dual_vc_dim_ = -1;
};

// Instance grammar: header "points N", then one range per line
// "w <weight> : i1 i2 ..." with 0-based indices; '#' starts a comment.
FiniteInstance load_finite_instance(std::istream& in);
FiniteInstance load_finite_instance_file(const std::string& path);
void save_finite_instance(std::ostream& out, const FiniteInstance& inst);
void save_finite_instance_file(const std::string& path, const FiniteInstance& inst);

/// Random instance: each (point, range) incidence drawn independently with
/// probability `density`; empty ranges are redrawn. Deterministic per seed.
FiniteInstance random_finite_instance(int num_points, int num_ranges,
                                      double density, uint64_t seed);

struct BruteForceOpt {
  int size = 0;
  std::vector<int> witness;
};

/// Exhaustive minimum hitting set by increasing subset size. Documented
/// cap: at most 24 points.
BruteForceOpt brute_force_opt(const FiniteInstance& inst);

/// Mass of the solution inside one range.
double measure_of_range(const FractionalSolution<int>& sol, int range_id,
                        const FiniteInstance& inst);

/// w0-fraction of ranges with mu(R) >= 1 (up to kMassSlack), plus one
/// violated range when the fraction is below beta_target.
FeasibilityReport<int> check_feasibility(const FractionalSolution<int>& sol,
                                         const FiniteInstance& inst,
                                         double beta_target);

/// Covering-loop state for a finite instance. Weights are kept relative to
/// the minimum active hit count so that (1-eps)^hit never underflows.
class FiniteMwu {
 public:
  using Point = int;
  using RangeRef = int;

  explicit FiniteMwu(const FiniteInstance& inst) : inst_(&inst) {}

  const FiniteInstance& instance() const { return *inst_; }

  void begin_run(long T, double eps);
  double w0_total() const { return inst_->total_weight(); }
  bool active_at_least(double delta) const {
    return active_w_ >= delta * w0_total();
  }
  double active_measure() const { return active_w_; }
  long hit_count(int range_id) const { return hits_[range_id]; }

  /// ln Phi(t); exact up to float rounding, never underflows.
  double potential_log() const;
  /// xi_t(p) / Phi(t) in [0, 1].
  double score_fraction(int p) const;
  /// Shifted score used for argmax comparisons: xi_t(p) / (1-eps)^hmin.
  double score_rel(int p) const;
  double potential_rel() const { return phi_rel_; }
  long hit_shift() const { return hmin_; }
  double log_one_minus_eps() const { return log1me_; }

  void record_point(int p);

  // Sampling-oracle hooks (A4 randomized path).
  int sample_range(Rng& rng) const;
  long opt_upper() const { return inst_->opt_upper_bound(); }
  int dual_dim() const { return inst_->dual_vc_dim(); }

 private:
  void refresh();

  const FiniteInstance* inst_;
  long T_ = 1;
  double eps_ = 0.25;
  double log1me_ = 0.0;
  std::vector<long> hits_;
  std::vector<double> w_rel_;  // (1-eps)^(hit - hmin) * w0, 0 when inactive
  long hmin_ = 0;
  double active_w_ = 0.0;
  double phi_rel_ = 0.0;
};

}  // namespace fracthit

#endif  // FRACTHIT_FINITE_HPP_
