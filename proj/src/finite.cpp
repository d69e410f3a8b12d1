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

#include "fracthit/finite.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fracthit {

namespace {

double growth_exponent_for(int num_ranges) {
  // sup over r >= 2 of ln(min(2^r, m)) / ln r, peaking near r = log2 m.
  double best = 1.0;
  const double m = std::max(1, num_ranges);
  for (int r = 2; r <= 64; ++r) {
    double cap = std::min(static_cast<double>(r) * std::log(2.0), std::log(m));
    best = std::max(best, cap / std::log(static_cast<double>(r)));
  }
  return best;
}

}  // namespace

FiniteInstance::FiniteInstance(int num_points,
                               std::vector<std::vector<int>> ranges,
                               std::vector<double> weights)
    : num_points_(num_points),
      ranges_(std::move(ranges)),
      weights_(std::move(weights)) {
  if (num_points_ <= 0) throw ValidationError("instance needs at least one point");
  if (ranges_.size() != weights_.size())
    throw ValidationError("ranges/weights length mismatch");
  for (size_t r = 0; r < ranges_.size(); ++r) {
    auto& ids = ranges_[r];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty())
      throw ValidationError("range " + std::to_string(r) + " is empty");
    if (ids.front() < 0 || ids.back() >= num_points_)
      throw ValidationError("range " + std::to_string(r) + " has an index out of bounds");
    if (!(weights_[r] > 0.0))
      throw ValidationError("range " + std::to_string(r) + " has non-positive weight");
  }
  point_ranges_.assign(num_points_, {});
  total_weight_ = 0.0;
  for (size_t r = 0; r < ranges_.size(); ++r) {
    total_weight_ += weights_[r];
    for (int p : ranges_[r]) point_ranges_[p].push_back(static_cast<int>(r));
  }
  gamma_ = growth_exponent_for(num_ranges());
  opt_upper_ = num_points_;
}

bool FiniteInstance::contains(int range_id, int point) const {
  if (range_id < 0 || range_id >= num_ranges())
    throw ValidationError("unknown range id " + std::to_string(range_id));
  const auto& ids = ranges_[range_id];
  return std::binary_search(ids.begin(), ids.end(), point);
}

std::vector<std::vector<int>> FiniteInstance::subsystem(
    const std::vector<int>& points) const {
  std::set<std::vector<int>> traces;
  for (const auto& range : ranges_) {
    std::vector<int> tr;
    for (int p : points)
      if (std::binary_search(range.begin(), range.end(), p)) tr.push_back(p);
    traces.insert(std::move(tr));
  }
  return {traces.begin(), traces.end()};
}

void FiniteInstance::set_opt_upper_bound(long n) {
  if (n < 1) throw ValidationError("opt upper bound must be positive");
  opt_upper_ = n;
}

namespace {

// Largest k such that some k-subset of [0, universe) is shattered,
// where trace_of(subset-member-bitmask over chosen ids) enumerates the
// dual items. Generic over which side plays "points".
template <class TraceFn>
int max_shattered(int universe, int num_traces, TraceFn&& trace_of) {
  int best = 0;
  std::vector<int> pick;
  // 2^k distinct masks require 2^k <= num_traces.
  int cap = 0;
  while ((1 << (cap + 1)) <= num_traces && cap + 1 <= universe) ++cap;
  std::vector<char> seen;
  auto shattered = [&](const std::vector<int>& ids) {
    const int k = static_cast<int>(ids.size());
    seen.assign(static_cast<size_t>(1) << k, 0);
    int distinct = 0;
    for (int t = 0; t < num_traces; ++t) {
      unsigned mask = trace_of(t, ids);
      if (!seen[mask]) {
        seen[mask] = 1;
        if (++distinct == (1 << k)) return true;
      }
    }
    return false;
  };
  std::function<bool(int, int, int)> search = [&](int k, int from, int depth) {
    if (depth == k) return shattered(pick);
    for (int i = from; i < universe; ++i) {
      pick.push_back(i);
      if (search(k, i + 1, depth + 1)) {
        pick.pop_back();
        return true;
      }
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= cap; ++k) {
    pick.clear();
    if (search(k, 0, 0))
      best = k;
    else
      break;
  }
  return best;
}

}  // namespace

int FiniteInstance::vc_dim() const {
  if (vc_dim_ >= 0) return vc_dim_;
  vc_dim_ = max_shattered(
      num_points_, num_ranges(), [&](int r, const std::vector<int>& ids) {
        unsigned mask = 0;
        for (size_t i = 0; i < ids.size(); ++i)
          if (std::binary_search(ranges_[r].begin(), ranges_[r].end(), ids[i]))
            mask |= 1u << i;
        return mask;
      });
  return vc_dim_;
}

int FiniteInstance::dual_vc_dim() const {
  if (dual_vc_dim_ >= 0) return dual_vc_dim_;
  dual_vc_dim_ = max_shattered(
      num_ranges(), num_points_, [&](int p, const std::vector<int>& ids) {
        unsigned mask = 0;
        for (size_t i = 0; i < ids.size(); ++i)
          if (std::binary_search(ranges_[ids[i]].begin(), ranges_[ids[i]].end(), p))
            mask |= 1u << i;
        return mask;
      });
  return dual_vc_dim_;
}

FiniteInstance load_finite_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  int num_points = -1;
  std::vector<std::vector<int>> ranges;
  std::vector<double> weights;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (num_points < 0) {
      if (tok != "points") throw ParseError("expected 'points N' header", lineno);
      if (!(ls >> num_points) || num_points <= 0)
        throw ParseError("bad point count", lineno);
      continue;
    }
    if (tok != "w") throw ParseError("expected 'w <weight> : indices'", lineno);
    double w;
    if (!(ls >> w)) throw ParseError("bad weight", lineno);
    if (!(w > 0.0)) throw ParseError("weight must be positive", lineno);
    std::string colon;
    if (!(ls >> colon) || colon != ":") throw ParseError("expected ':'", lineno);
    std::vector<int> ids;
    int id;
    while (ls >> id) {
      if (id < 0 || id >= num_points)
        throw ParseError("point index out of bounds", lineno);
      ids.push_back(id);
    }
    if (!ls.eof()) throw ParseError("bad point index", lineno);
    if (ids.empty()) throw ParseError("empty range", lineno);
    ranges.push_back(std::move(ids));
    weights.push_back(w);
  }
  if (num_points < 0) throw ParseError("missing 'points N' header", lineno);
  try {
    return FiniteInstance(num_points, std::move(ranges), std::move(weights));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), lineno);
  }
}

FiniteInstance load_finite_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open instance file: " + path);
  return load_finite_instance(f);
}

void save_finite_instance(std::ostream& out, const FiniteInstance& inst) {
  out << "points " << inst.num_points() << "\n";
  for (int r = 0; r < inst.num_ranges(); ++r) {
    out << "w " << inst.weight(r) << " :";
    for (int p : inst.range(r)) out << " " << p;
    out << "\n";
  }
}

void save_finite_instance_file(const std::string& path, const FiniteInstance& inst) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open file for writing: " + path);
  save_finite_instance(f, inst);
}

FiniteInstance random_finite_instance(int num_points, int num_ranges,
                                      double density, uint64_t seed) {
  if (!(density > 0.0 && density <= 1.0))
    throw ValidationError("density must lie in (0, 1]");
  Rng rng(seed);
  auto rand01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::vector<int>> ranges(num_ranges);
  for (int r = 0; r < num_ranges; ++r) {
    for (int tries = 0; ranges[r].empty(); ++tries) {
      for (int p = 0; p < num_points; ++p)
        if (rand01() < density) ranges[r].push_back(p);
      if (tries > 64 && ranges[r].empty())
        ranges[r].push_back(static_cast<int>(rng() % num_points));
    }
  }
  return FiniteInstance(num_points, std::move(ranges),
                        std::vector<double>(num_ranges, 1.0));
}

BruteForceOpt brute_force_opt(const FiniteInstance& inst) {
  const int n = inst.num_points();
  if (n > 24) throw UnsupportedError("brute_force_opt is capped at 24 points");
  const int m = inst.num_ranges();
  if (m == 0) return {0, {}};
  std::vector<uint32_t> range_mask(m, 0);
  for (int r = 0; r < m; ++r)
    for (int p : inst.range(r)) range_mask[r] |= uint32_t{1} << p;

  std::vector<int> pick;
  std::function<bool(int, int, int)> search = [&](int k, int from, int depth) {
    if (depth == k) {
      uint32_t mask = 0;
      for (int p : pick) mask |= uint32_t{1} << p;
      for (int r = 0; r < m; ++r)
        if (!(range_mask[r] & mask)) return false;
      return true;
    }
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      if (search(k, i + 1, depth + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= n; ++k) {
    pick.clear();
    if (search(k, 0, 0)) return {k, pick};
  }
  throw Error("no hitting set exists (unreachable: ranges are nonempty)");
}

double measure_of_range(const FractionalSolution<int>& sol, int range_id,
                        const FiniteInstance& inst) {
  if (range_id < 0 || range_id >= inst.num_ranges())
    throw ValidationError("unknown range id " + std::to_string(range_id));
  double mass = 0.0;
  for (const auto& [p, m] : sol.support)
    if (inst.contains(range_id, p)) mass += m;
  return mass;
}

FeasibilityReport<int> check_feasibility(const FractionalSolution<int>& sol,
                                         const FiniteInstance& inst,
                                         double beta_target) {
  FeasibilityReport<int> rep;
  double satisfied = 0.0;
  for (int r = 0; r < inst.num_ranges(); ++r) {
    if (measure_of_range(sol, r, inst) >= 1.0 - kMassSlack)
      satisfied += inst.weight(r);
    else if (!rep.witness_violated)
      rep.witness_violated = r;
  }
  rep.feasible_mass_fraction = satisfied / inst.total_weight();
  if (rep.feasible_mass_fraction >= beta_target) rep.witness_violated.reset();
  return rep;
}

void FiniteMwu::begin_run(long T, double eps) {
  if (T < 1) throw ValidationError("T must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0,1)");
  T_ = T;
  eps_ = eps;
  log1me_ = std::log(1.0 - eps);
  hits_.assign(inst_->num_ranges(), 0);
  w_rel_.assign(inst_->num_ranges(), 0.0);
  refresh();
}

void FiniteMwu::refresh() {
  hmin_ = -1;
  active_w_ = 0.0;
  for (int r = 0; r < inst_->num_ranges(); ++r) {
    if (hits_[r] >= T_) continue;
    active_w_ += inst_->weight(r);
    if (hmin_ < 0 || hits_[r] < hmin_) hmin_ = hits_[r];
  }
  if (hmin_ < 0) hmin_ = 0;
  phi_rel_ = 0.0;
  for (int r = 0; r < inst_->num_ranges(); ++r) {
    if (hits_[r] >= T_) {
      w_rel_[r] = 0.0;
      continue;
    }
    w_rel_[r] = std::exp(static_cast<double>(hits_[r] - hmin_) * log1me_) *
                inst_->weight(r);
    phi_rel_ += w_rel_[r];
  }
}

double FiniteMwu::potential_log() const {
  if (phi_rel_ <= 0.0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(hmin_) * log1me_ + std::log(phi_rel_);
}

double FiniteMwu::score_rel(int p) const {
  double s = 0.0;
  for (int r : inst_->ranges_of_point(p)) s += w_rel_[r];
  return s;
}

double FiniteMwu::score_fraction(int p) const {
  if (phi_rel_ <= 0.0) return 0.0;
  return score_rel(p) / phi_rel_;
}

void FiniteMwu::record_point(int p) {
  if (p < 0 || p >= inst_->num_points())
    throw ValidationError("point index out of bounds");
  for (int r : inst_->ranges_of_point(p))
    if (hits_[r] < T_) ++hits_[r];
  refresh();
}

int FiniteMwu::sample_range(Rng& rng) const {
  if (phi_rel_ <= 0.0) throw Error("sample_range: no active weight");
  double r = static_cast<double>(rng() >> 11) * 0x1.0p-53 * phi_rel_;
  double acc = 0.0;
  int last_active = -1;
  for (int i = 0; i < inst_->num_ranges(); ++i) {
    if (w_rel_[i] <= 0.0) continue;
    last_active = i;
    acc += w_rel_[i];
    if (r < acc) return i;
  }
  if (last_active < 0) throw Error("sample_range: no active range");
  return last_active;
}

}  // namespace fracthit
