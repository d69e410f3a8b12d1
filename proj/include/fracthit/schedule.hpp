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

#ifndef FRACTHIT_SCHEDULE_HPP_
#define FRACTHIT_SCHEDULE_HPP_

#include <cstdint>

#include "fracthit/errors.hpp"

namespace fracthit {

/// Parameters that drive the covering loop.
///
/// With accuracies eps, delta, omega and growth exponent gamma:
///   T0    = opt / (eps (1-omega) delta^(1/gamma))
///           * (ln(1/(1-eps)) + ln(1/(eps delta)))
///   a     = gamma / eps^2,   b = max(ln T0, 1)
///   T     = ceil(e^2 a b (ln(a+e-1) + 1))
///   t_max = ceil(opt / (eps (1-omega)) * (T ln(1/(1-eps)) + ln(1/(eps delta))))
/// T is then doubled until both T/a > ln T + b and
/// T >= max(1, gamma ln(t_max) + ln(1/delta)) / eps^2 hold (t_max tracks T).
struct ScheduleParams {
  double eps = 0.25;
  double delta = 0.05;
  double omega = 0.25;
  double gamma = 1.0;
  long opt_upper = 1;
  long T = 1;
  double T0 = 0.0;
  long t_max = 1;
  double a = 0.0;
  double b = 0.0;
};

/// Lemma-level precondition: the quality argument needs eps <= 0.68.
inline constexpr double kMaxEps = 0.68;

ScheduleParams compute_schedule(double eps, double delta, double omega,
                                double gamma, long opt_upper);

}  // namespace fracthit

#endif  // FRACTHIT_SCHEDULE_HPP_
