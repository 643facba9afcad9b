// Copyright 2026 The exactlp authors
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

#ifndef EXACTLP_TOLERANCES_HPP_
#define EXACTLP_TOLERANCES_HPP_

#include "exactlp/precision.hpp"

namespace exactlp {

/// Floating-point tolerances active at one precision level.
struct ToleranceSet {
  double zero_eps;    // below this, values are treated as zero
  double pivot_eps;   // below this, candidate pivots are rejected
  double update_tol;  // factorization-drift bound for eta updates
  double feas_tol;    // primal feasibility
  double opt_tol;     // dual feasibility (reduced costs)
};

/// How feas/opt tolerances react to precision changes. Combined refinement
/// keeps them at their double-precision defaults; pure boosting shrinks them
/// at the rate the precision grows: 2^(a*p/64) with 2^a the default.
enum class ToleranceMode { kCombined, kScaledPure };

inline constexpr double kDefaultFeasTol = 1e-9;
inline constexpr double kDefaultOptTol = 1e-9;

/// Zero/pivot/update thresholds follow 10^-floor(p'*c) with p' = p*log10(2)
/// and per-tolerance constants c = 1, 0.625 and 0.8.
ToleranceSet tolerance_set(Precision p, ToleranceMode mode = ToleranceMode::kCombined,
                           double feas_default = kDefaultFeasTol,
                           double opt_default = kDefaultOptTol);

}  // namespace exactlp

#endif  // EXACTLP_TOLERANCES_HPP_
