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

#ifndef EXACTLP_REFINE_HPP_
#define EXACTLP_REFINE_HPP_

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "exactlp/lp_model.hpp"
#include "exactlp/simplex.hpp"

namespace exactlp {

/// State of one refinement run: the exact candidate, the scaling factors and
/// the per-round maximum violations.
struct RefinementState {
  long k = 1;
  PrimalDualSolution sol;
  Rational delta_p_scale{1};  // Delta_P, >= 1
  Rational delta_d_scale{1};  // Delta_D, >= 1
  Residuals residuals;        // of sol, exact
  std::vector<Rational> violation_history;
};

/// Scaling update 1 / max(delta, 1/(alpha * Delta_prev)), exactly.
Rational scale_factors(const Rational& delta, const Rational& delta_prev, const Rational& alpha);

/// True iff the last two consecutive violation ratios are both below 2^4.
bool detect_stall(const std::vector<Rational>& violation_history);

/// Exact data of the error-correcting problem: b = dP * b_hat,
/// lower = dP * l_hat, c = dD * c_hat. The matrix is unchanged.
struct TransformedData {
  RatVector b, lower, c;
};
TransformedData transformed_data(const Residuals& res, const Rational& dP, const Rational& dD);

/// Error-correcting LP rounded at precision p (the matrix re-rounded, the
/// scaled residuals in place of rhs/bounds/objective).
template <class T>
FloatLP<T> build_transformed_lp(const RationalLP& lp, const Residuals& res, const Rational& dP,
                                const Rational& dD, Precision p,
                                ToleranceMode mode = ToleranceMode::kCombined);

/// Applies a correction in exact arithmetic: x += xh/dP, y += yh/dD,
/// increments k and appends the fresh maximum violation to the history.
void correct(RefinementState& state, const RationalLP& lp, const RatVector& xh,
             const RatVector& yh, const Rational& dP, const Rational& dD);

enum class RefineStatus {
  kExactOptimal,
  kFpInfeasible,
  kFpUnbounded,
  kStalled,
  kNumericalFailure,
  kOracleViolation,
  kTimeLimit,
  kIterationLimit,
};

struct RefineOptions {
  Rational alpha = Rational::pow10(12);
  long max_rounds = 1000;
  long max_pivots = std::numeric_limits<long>::max();
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  int exact_check_period = 5;
  Rational exact_check_threshold = Rational::pow10(-15);
  bool defer_exact_checks = false;  // measurement runs: refine without terminating early
  bool oracle_diagnostics = false;
  Rational oracle_eta{1, 2};
  Rational oracle_sigma;  // <= 0: derived as n * feas_tol * (1 + ||c||_inf)
};

struct RefineResult {
  RefineStatus status = RefineStatus::kNumericalFailure;
  Basis basis;  // basis at return

  // kExactOptimal
  PrimalDualSolution solution;
  Rational objective;

  // kFpInfeasible
  RatVector farkas_candidate;
  std::vector<int8_t> farkas_pattern;

  // kFpUnbounded
  RatVector ray_candidate;
  int unbounded_entering = -1;

  bool has_fp_optimal_basis = false;
  Basis last_fp_optimal_basis;
  std::vector<std::pair<long, Basis>> snapshots;
  long fail_iteration = 0;

  std::vector<Rational> violation_history;
  long rounds = 0;  // transformed solves performed
  long pivots = 0;
  long exact_factorizations = 0;
  long oracle_checks = 0, oracle_passed = 0;
};

/// One run of LP iterative refinement at the precision of `solver`'s LP.
/// The caller owns the solver (and thus the warm basis across calls).
template <class T>
RefineResult refine_loop(const RationalLP& lp, SimplexSolver<T>& solver, const FloatLP<T>& flp,
                         const RefineOptions& opt);

extern template RefineResult refine_loop<double>(const RationalLP&, SimplexSolver<double>&,
                                                 const FloatLP<double>&, const RefineOptions&);
extern template RefineResult refine_loop<BigFloat>(const RationalLP&, SimplexSolver<BigFloat>&,
                                                   const FloatLP<BigFloat>&, const RefineOptions&);

}  // namespace exactlp

#endif  // EXACTLP_REFINE_HPP_
