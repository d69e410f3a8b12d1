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

#include "fracthit/schedule.hpp"

#include <cmath>
#include <string>

namespace fracthit {

namespace {

long ceil_to_long(double x) {
  double c = std::ceil(x);
  if (!(c < 9.0e18)) throw ValidationError("schedule value overflows");
  return static_cast<long>(c);
}

}  // namespace

ScheduleParams compute_schedule(double eps, double delta, double omega,
                                double gamma, long opt_upper) {
  if (!(eps > 0.0) || eps > kMaxEps)
    throw ValidationError("eps must lie in (0, 0.68], got " + std::to_string(eps));
  if (!(delta > 0.0 && delta < 1.0))
    throw ValidationError("delta must lie in (0, 1)");
  if (!(omega > 0.0 && omega < 1.0))
    throw ValidationError("omega must lie in (0, 1)");
  if (!(gamma >= 1.0)) throw ValidationError("gamma must be at least 1");
  if (opt_upper < 1) throw ValidationError("opt_upper must be positive");

  ScheduleParams sp;
  sp.eps = eps;
  sp.delta = delta;
  sp.omega = omega;
  sp.gamma = gamma;
  sp.opt_upper = opt_upper;

  const double e = std::exp(1.0);
  const double log_shrink = std::log(1.0 / (1.0 - eps));
  const double log_ed = std::log(1.0 / (eps * delta));
  sp.T0 = static_cast<double>(opt_upper) /
          (eps * (1.0 - omega) * std::pow(delta, 1.0 / gamma)) *
          (log_shrink + log_ed);
  sp.a = gamma / (eps * eps);
  sp.b = std::max(std::log(sp.T0), 1.0);
  sp.T = ceil_to_long(e * e * sp.a * sp.b * (std::log(sp.a + e - 1.0) + 1.0));

  auto t_max_for = [&](long T) {
    return ceil_to_long(static_cast<double>(opt_upper) / (eps * (1.0 - omega)) *
                        (static_cast<double>(T) * log_shrink + log_ed));
  };
  auto conditions_hold = [&](long T, long t_max) {
    bool growth =
        static_cast<double>(T) / sp.a > std::log(static_cast<double>(T)) + sp.b;
    double need = std::max(1.0, gamma * std::log(static_cast<double>(t_max)) +
                                    std::log(1.0 / delta)) /
                  (eps * eps);
    return growth && static_cast<double>(T) >= need;
  };

  sp.t_max = t_max_for(sp.T);
  while (!conditions_hold(sp.T, sp.t_max)) {
    if (sp.T > (1L << 60)) throw ValidationError("schedule T overflows");
    sp.T *= 2;
    sp.t_max = t_max_for(sp.T);
  }
  return sp;
}

}  // namespace fracthit
