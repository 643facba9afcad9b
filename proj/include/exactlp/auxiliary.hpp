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

#ifndef EXACTLP_AUXILIARY_HPP_
#define EXACTLP_AUXILIARY_HPP_

#include <variant>

#include "exactlp/lp_model.hpp"

namespace exactlp {

enum class AuxKind { kNone, kFeasibility, kUnboundedness };

/// Feasibility test problem for min{c^T x | Ax=b, x >= l}:
///
///   max tau  s.t.  A xi - (b - A l) tau = 0,  tau + s = 1,  xi, tau, s >= 0
///
/// posed as a minimization of -tau. Its optimum is always attained and is
/// 1 when the original LP is feasible (witness x = l + xi*/tau*) and 0 when
/// it is not (the dual of the first m rows is then an exact Farkas proof).
/// Variables are laid out [xi_0..xi_{n-1}, tau, s].
RationalLP build_feasibility_lp(const RationalLP& lp);

/// Unbounded-direction problem: the pure feasibility system
///
///   A v = 0,  c^T v = -1,  v >= 0
///
/// posed as an LP with zero objective over rows [A; c^T]. Any exact solution
/// is an improving ray; exact infeasibility means the LP admits no such ray.
RationalLP build_unboundedness_lp(const RationalLP& lp);

struct Feasible {
  RatVector witness;  // x = l + xi*/tau*
};
struct Infeasible {};

/// Reads off the feasibility verdict from the exact optimum of the
/// feasibility problem. tau* outside [0, 1] indicates an exactness bug and
/// throws std::logic_error.
std::variant<Feasible, Infeasible> interpret_feasibility(const RationalLP& lp,
                                                         const Rational& tau_star,
                                                         const RatVector& xi_star);

}  // namespace exactlp

#endif  // EXACTLP_AUXILIARY_HPP_
