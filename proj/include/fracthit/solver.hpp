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

#ifndef FRACTHIT_SOLVER_HPP_
#define FRACTHIT_SOLVER_HPP_

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fracthit/core.hpp"
#include "fracthit/schedule.hpp"

namespace fracthit {

/// One covering-loop iteration, as written to the trace. Potentials and
/// scores are natural logs: the raw values underfly doubles once hit
/// counts approach T.
template <class P>
struct TraceRecord {
  long t = 0;             // 1-based iteration index; |P_t| == t
  double active_measure = 0.0;
  double phi_log = 0.0;
  P point{};
  double score_log = 0.0;  // oracle-reported ln xi_t(p)
};

struct SolveOptions {
  bool debug_invariants = false;
  bool keep_trace = false;
  /// Reference optimum for the cumulative potential check; any upper bound
  /// on the fractional optimum. Defaults to the schedule's opt_upper.
  std::optional<long> opt_reference;
};

template <class P>
struct SolveResult {
  FractionalSolution<P> solution;
  std::vector<TraceRecord<P>> trace;
  long iterations = 0;
};

template <class P>
struct OracleResult {
  P point{};
  double score_log = 0.0;
};

/// Per-step potential inequality: Phi(t+1) <= Phi(t) exp(-eps xi/Phi),
/// checked in log domain at relative tolerance rtol.
inline bool verify_potential_step(double phi_log_before, double xi_fraction,
                                  double eps, double phi_log_after,
                                  double rtol = 1e-9) {
  return phi_log_after <= phi_log_before - eps * xi_fraction + rtol;
}

/// Cumulative bound: Phi(t) <= Phi(0) exp(-eps (1-omega)/(1+eps) t / opt_ref)
/// for any opt_ref at least the fractional optimum (the exponent only
/// shrinks when opt_ref grows, so the inequality direction is preserved).
inline bool verify_cumulative_bound(double phi0_log, double phi_log, double eps,
                                    double omega, long t, double opt_ref,
                                    double rtol = 1e-9) {
  double bound = phi0_log - eps * (1.0 - omega) / (1.0 + eps) *
                                static_cast<double>(t) / opt_ref;
  return phi_log <= bound + rtol;
}

/// The fractional covering loop: while at least a delta-fraction of the
/// base measure is active, ask the oracle for a heavy point, add it to the
/// chosen multiset, and update the adapter's hit bookkeeping. Returns the
/// measure mu with mass multiplicity/T per distinct point.
///
/// Throws if the iteration budget t_max is exceeded, which the analysis
/// rules out while the oracle honors its (1-omega) contract.
template <class State, class Oracle>
SolveResult<typename State::Point> solve_fractional(State& state,
                                                    const ScheduleParams& sp,
                                                    Oracle&& oracle,
                                                    uint64_t rng_seed,
                                                    const SolveOptions& opt = {}) {
  using P = typename State::Point;
  state.begin_run(sp.T, sp.eps);
  Rng rng(rng_seed);

  SolveResult<P> out;
  std::vector<P> chosen;
  const double phi0_log = state.potential_log();
  const double opt_ref = static_cast<double>(opt.opt_reference.value_or(sp.opt_upper));

  while (state.active_at_least(sp.delta)) {
    if (static_cast<long>(chosen.size()) >= sp.t_max)
      throw Error("iteration bound exceeded -- oracle contract likely violated");
    OracleResult<P> pick = oracle(state, rng);

    double phi_before = 0.0, frac = 0.0;
    if (opt.debug_invariants) {
      phi_before = state.potential_log();
      frac = state.score_fraction(pick.point);
    }
    chosen.push_back(pick.point);
    state.record_point(pick.point);
    const long t = static_cast<long>(chosen.size());

    if (opt.debug_invariants) {
      const double phi_after = state.potential_log();
      if (!verify_potential_step(phi_before, frac, sp.eps, phi_after))
        throw Error("potential step inequality violated at t=" + std::to_string(t));
      if (!verify_cumulative_bound(phi0_log, phi_after, sp.eps, sp.omega, t, opt_ref))
        throw Error("cumulative potential bound violated at t=" + std::to_string(t));
    }
    if (opt.keep_trace)
      out.trace.push_back({t, state.active_measure(), state.potential_log(),
                           pick.point, pick.score_log});
  }

  out.iterations = static_cast<long>(chosen.size());
  out.solution = solution_from_multiset(chosen, sp.T);
  return out;
}

/// Measured solution quality against a reference optimum: alpha compared
/// with the (1+5 eps)/(1-omega) target, beta against 1-delta.
template <class Sol, class Inst>
ApproxQuality verify_final_quality(const Sol& solution, const Inst& inst,
                                   const ScheduleParams& sp, double opt_reference) {
  ApproxQuality q;
  q.alpha = solution.total_mass / opt_reference;
  auto rep = check_feasibility(solution, inst, 1.0 - sp.delta);
  q.beta = rep.feasible_mass_fraction;
  const double target = (1.0 + 5.0 * sp.eps) / (1.0 - sp.omega);
  q.alpha_ok = q.alpha <= target + kMassSlack;
  q.beta_ok = q.beta >= 1.0 - sp.delta - kMassSlack;
  return q;
}

}  // namespace fracthit

#endif  // FRACTHIT_SOLVER_HPP_
