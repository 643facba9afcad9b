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

#include "exactlp/refine.hpp"

#include <cassert>

#include "exactlp/exact_verify.hpp"

namespace exactlp {

Rational scale_factors(const Rational& delta, const Rational& delta_prev, const Rational& alpha) {
  assert(delta.sgn() >= 0 && delta_prev >= Rational(1) && alpha > Rational(1));
  Rational cap = (alpha * delta_prev).inv();
  return max(delta, cap).inv();
}

bool detect_stall(const std::vector<Rational>& violation_history) {
  const size_t h = violation_history.size();
  if (h < 3) return false;
  const Rational threshold(16);  // 2^4
  for (size_t k = h - 2; k < h; ++k) {
    const Rational& prev = violation_history[k - 1];
    const Rational& cur = violation_history[k];
    if (cur.is_zero()) return false;  // infinite improvement ratio
    if (prev < threshold * cur) continue;
    return false;  // this step improved by >= 2^4
  }
  return true;
}

TransformedData transformed_data(const Residuals& res, const Rational& dP, const Rational& dD) {
  TransformedData td;
  td.b.reserve(res.b_hat.size());
  for (const auto& v : res.b_hat) td.b.push_back(dP * v);
  td.lower.reserve(res.l_hat.size());
  for (const auto& v : res.l_hat) td.lower.push_back(dP * v);
  td.c.reserve(res.c_hat.size());
  for (const auto& v : res.c_hat) td.c.push_back(dD * v);
  return td;
}

template <class T>
FloatLP<T> build_transformed_lp(const RationalLP& lp, const Residuals& res, const Rational& dP,
                                const Rational& dD, Precision p, ToleranceMode mode) {
  TransformedData td = transformed_data(res, dP, dD);
  FloatLP<T> f;
  f.A = lp.A.map([&](const Rational& q) { return FloatTraits<T>::from_rational(q, p.bits); });
  f.b = round_vector<T>(td.b, p.bits);
  f.c = round_vector<T>(td.c, p.bits);
  f.lower = round_vector<T>(td.lower, p.bits);
  f.precision = p;
  f.tolerances = tolerance_set(p, mode);
  return f;
}

template FloatLP<double> build_transformed_lp<double>(const RationalLP&, const Residuals&,
                                                      const Rational&, const Rational&, Precision,
                                                      ToleranceMode);
template FloatLP<BigFloat> build_transformed_lp<BigFloat>(const RationalLP&, const Residuals&,
                                                          const Rational&, const Rational&,
                                                          Precision, ToleranceMode);

void correct(RefinementState& state, const RationalLP& lp, const RatVector& xh,
             const RatVector& yh, const Rational& dP, const Rational& dD) {
  Rational inv_p = dP.inv(), inv_d = dD.inv();
  for (size_t j = 0; j < state.sol.x.size(); ++j) state.sol.x[j] += xh[j] * inv_p;
  for (size_t i = 0; i < state.sol.y.size(); ++i) state.sol.y[i] += yh[i] * inv_d;
  state.delta_p_scale = dP;
  state.delta_d_scale = dD;
  ++state.k;
  state.residuals = compute_residuals(lp, state.sol);
  state.violation_history.push_back(state.residuals.max_violation());
}

namespace {

template <class T>
RatVector lift_vector(const std::vector<T>& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(FloatTraits<T>::to_rational(e));
  return out;
}

template <class T>
bool all_finite(const std::vector<T>& v) {
  for (const auto& e : v)
    if (!FloatTraits<T>::is_finite(e)) return false;
  return true;
}

}  // namespace

template <class T>
RefineResult refine_loop(const RationalLP& lp, SimplexSolver<T>& solver, const FloatLP<T>& flp,
                         const RefineOptions& opt) {
  RefineResult res;
  auto record_state = [&](RefineStatus st) {
    res.status = st;
    res.basis = solver.basis();
    res.snapshots = solver.snapshots();
    res.fail_iteration = solver.total_pivots();
  };
  auto fp_limits = [&]() {
    SimplexLimits lim;
    lim.max_pivots = opt.max_pivots - res.pivots;
    lim.deadline = opt.deadline;
    return lim;
  };

  FpSolveOutcome<T> out = solver.solve(fp_limits());
  res.pivots += out.iterations;
  switch (out.status) {
    case FpStatus::kInfeasible:
      record_state(RefineStatus::kFpInfeasible);
      res.farkas_candidate = lift_vector(out.farkas_ray);
      res.farkas_pattern = std::move(out.farkas_pattern);
      return res;
    case FpStatus::kUnbounded:
      record_state(RefineStatus::kFpUnbounded);
      res.ray_candidate = lift_vector(out.primal_ray);
      res.unbounded_entering = out.unbounded_entering;
      return res;
    case FpStatus::kNumericalFailure:
      record_state(RefineStatus::kNumericalFailure);
      return res;
    case FpStatus::kIterationLimit:
      record_state(RefineStatus::kIterationLimit);
      return res;
    case FpStatus::kTimeLimit:
      record_state(RefineStatus::kTimeLimit);
      return res;
    case FpStatus::kOptimal:
      break;
  }
  res.has_fp_optimal_basis = true;
  res.last_fp_optimal_basis = out.basis;

  RefinementState state;
  state.sol.x = lift_vector(out.x);
  state.sol.y = lift_vector(out.y);
  state.sol.source_precision = flp.precision.bits;
  state.residuals = compute_residuals(lp, state.sol);
  state.violation_history.push_back(state.residuals.max_violation());
  const Rational initial_violation = state.violation_history.front();

  Basis last_checked;
  bool any_checked = false;

  for (;;) {
    if (std::chrono::steady_clock::now() >= opt.deadline) {
      record_state(RefineStatus::kTimeLimit);
      res.violation_history = state.violation_history;
      return res;
    }

    // Termination check first: rational factorization of the current basis.
    bool due = state.k == 1 || (state.k - 1) % opt.exact_check_period == 0 ||
               state.violation_history.back() <= opt.exact_check_threshold * initial_violation;
    if (opt.defer_exact_checks) due = false;
    Basis current = solver.basis();
    if (due && (!any_checked || !(current == last_checked))) {
      ++res.exact_factorizations;
      if (auto bs = basic_solution(lp, current)) {
        if (verify_optimal(lp, *bs)) {
          record_state(RefineStatus::kExactOptimal);
          res.solution = std::move(*bs);
          res.objective = objective_value(lp, res.solution.x);
          res.violation_history = state.violation_history;
          res.rounds = state.k - 1;
          return res;
        }
      }
      last_checked = current;
      any_checked = true;
    }

    const Residuals& r = state.residuals;
    Rational viol = r.max_violation();

    if (viol.is_zero() && verify_optimal(lp, state.sol)) {
      // Candidate is exactly optimal without factorization.
      record_state(RefineStatus::kExactOptimal);
      res.solution = state.sol;
      res.objective = objective_value(lp, res.solution.x);
      res.violation_history = state.violation_history;
      res.rounds = state.k - 1;
      return res;
    }

    if (detect_stall(state.violation_history)) {
      record_state(RefineStatus::kStalled);
      res.violation_history = state.violation_history;
      res.rounds = state.k - 1;
      return res;
    }
    if (state.k > opt.max_rounds) {
      record_state(RefineStatus::kIterationLimit);
      res.violation_history = state.violation_history;
      res.rounds = state.k - 1;
      return res;
    }

    // Scale, transform, solve the error-correcting problem.
    Rational dP = scale_factors(r.delta_P, state.delta_p_scale, opt.alpha);
    Rational dD = scale_factors(r.delta_D, state.delta_d_scale, opt.alpha);
    TransformedData td = transformed_data(r, dP, dD);
    auto fb = round_vector<T>(td.b, flp.precision.bits);
    auto fc = round_vector<T>(td.c, flp.precision.bits);
    auto fl = round_vector<T>(td.lower, flp.precision.bits);
    if (!all_finite(fb) || !all_finite(fc) || !all_finite(fl)) {
      // Scaled residuals overflowed the working exponent range; a wider
      // format absorbs this.
      record_state(RefineStatus::kNumericalFailure);
      res.violation_history = state.violation_history;
      res.rounds = state.k - 1;
      return res;
    }
    solver.update_problem(std::move(fb), std::move(fc), std::move(fl));
    out = solver.solve(fp_limits());
    res.pivots += out.iterations;
    ++res.rounds;

    switch (out.status) {
      case FpStatus::kInfeasible:
        // Feasibility of the shifted problem is feasibility of the original.
        record_state(RefineStatus::kFpInfeasible);
        res.farkas_candidate = lift_vector(out.farkas_ray);
        res.farkas_pattern = std::move(out.farkas_pattern);
        res.violation_history = state.violation_history;
        return res;
      case FpStatus::kUnbounded:
        record_state(RefineStatus::kFpUnbounded);
        res.ray_candidate = lift_vector(out.primal_ray);
        res.unbounded_entering = out.unbounded_entering;
        res.violation_history = state.violation_history;
        return res;
      case FpStatus::kNumericalFailure:
        record_state(RefineStatus::kNumericalFailure);
        res.violation_history = state.violation_history;
        return res;
      case FpStatus::kIterationLimit:
        record_state(RefineStatus::kIterationLimit);
        res.violation_history = state.violation_history;
        return res;
      case FpStatus::kTimeLimit:
        record_state(RefineStatus::kTimeLimit);
        res.violation_history = state.violation_history;
        return res;
      case FpStatus::kOptimal:
        break;
    }
    res.has_fp_optimal_basis = true;
    res.last_fp_optimal_basis = out.basis;

    RatVector xh = lift_vector(out.x);
    RatVector yh = lift_vector(out.y);

    // Residuals of the claimed-optimal correction against the exact
    // transformed data; a maximum violation reaching one breaks the
    // contraction argument and is treated as an oracle failure.
    RationalLP trans;
    trans.A = lp.A;
    trans.b = std::move(td.b);
    trans.c = std::move(td.c);
    trans.lower = std::move(td.lower);
    PrimalDualSolution lifted{xh, yh, flp.precision.bits};
    Residuals tr = compute_residuals(trans, lifted);
    if (opt.oracle_diagnostics) {
      ++res.oracle_checks;
      Rational sigma = opt.oracle_sigma;
      if (sigma.sgn() <= 0) {
        sigma = Rational(lp.ncols()) * Rational::pow10(-9) * (Rational(1) + inf_norm(trans.c));
      }
      if (check_oracle_contract(trans, lifted, opt.oracle_eta, sigma)) ++res.oracle_passed;
    }
    if (tr.max_violation() >= Rational(1)) {
      record_state(RefineStatus::kOracleViolation);
      res.violation_history = state.violation_history;
      return res;
    }

    correct(state, lp, xh, yh, dP, dD);
  }
}

template RefineResult refine_loop<double>(const RationalLP&, SimplexSolver<double>&,
                                          const FloatLP<double>&, const RefineOptions&);
template RefineResult refine_loop<BigFloat>(const RationalLP&, SimplexSolver<BigFloat>&,
                                            const FloatLP<BigFloat>&, const RefineOptions&);

}  // namespace exactlp
