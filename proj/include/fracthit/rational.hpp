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

#ifndef FRACTHIT_RATIONAL_HPP_
#define FRACTHIT_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>

namespace fracthit {

using Int = mpz_class;
using Rat = mpq_class;

inline double to_double(const Rat& r) { return r.get_d(); }

/// Exact binary expansion of a double (no rounding).
inline Rat rat_from_double(double x) { return Rat(x); }

inline int sign(const Rat& r) { return sgn(r); }

/// Parses "n/d" or a bare integer ("3" == "3/1"). Returns nullopt on junk
/// or a zero denominator.
std::optional<Rat> parse_rat(const std::string& token);

/// Canonical form "num/den", den > 0, always with the slash.
std::string format_rat(const Rat& r);

}  // namespace fracthit

#endif  // FRACTHIT_RATIONAL_HPP_
