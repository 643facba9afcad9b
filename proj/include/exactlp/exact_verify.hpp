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

#ifndef EXACTLP_EXACT_VERIFY_HPP_
#define EXACTLP_EXACT_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "exactlp/basis.hpp"
#include "exactlp/lp_model.hpp"
#include "exactlp/lu.hpp"

namespace exactlp {

/// Certified outcome of an exact solve. Construction sites must run the
/// matching verify_* before returning one to a caller.
struct Certificate {
  enum class Kind { kOptimal, kInfeasible, kUnbounded };
  Kind kind = Kind::kOptimal;

  // kOptimal
  PrimalDualSolution solution;
  Basis basis;
  Rational objective;

  // kInfeasible
  RatVector farkas_y;

  // kUnbounded
  RatVector witness_x;
  RatVector ray_v;  // c^T ray == -1 exactly
};

/// Exact LU of a square rational matrix: P B Q = L U with Markowitz-style
/// fill-minimizing pivoting over exact nonzeros. Returns nullopt iff B is
/// singular (exact zero pivot after full search).
class RationalLu {
 public:
  static std::optional<RationalLu> factorize(const SparseRationalMatrix& b);

  RatVector solve(const RatVector& rhs) const;            // B x = rhs
  RatVector solve_transpose(const RatVector& rhs) const;  // B^T x = rhs
  Rational determinant() const { return lu_.determinant(); }

 private:
  LuFactorization<Rational> lu_;
};

/// Exact basic solution of `basis`: nonbasic x_j = lower_j, basic x solves
/// B x_B = b - N l_N, y solves B^T y = c_B. Basis entries j >= n denote unit
/// columns with zero cost. Returns nullopt on a singular basis.
std::optional<PrimalDualSolution> basic_solution(const RationalLP& lp, const Basis& basis);

/// True iff A x = b, x >= lower and c - A^T y >= 0 hold exactly. Asserts
/// complementary slackness (automatic for basic solutions).
bool verify_optimal(const RationalLP& lp, const PrimalDualSolution& sol);

/// True iff y proves {Ax = b, x >= lower} empty: y^T A <= 0 componentwise
/// and y^T b - (y^T A) lower > 0.
bool verify_farkas(const RationalLP& lp, const RatVector& y);

/// True iff witness is exactly feasible and ray satisfies A v = 0, v >= 0,
/// c^T v = -1 exactly.
bool verify_unbounded(const RationalLP& lp, const RatVector& witness, const RatVector& ray);

/// Limited-precision oracle contract: primal/dual violations bounded by eta
/// and the complementary slackness violation by sigma, evaluated exactly on
/// the (lifted) candidate.
bool check_oracle_contract(const RationalLP& lp, const PrimalDualSolution& sol,
                           const Rational& eta, const Rational& sigma);

/// Exact Farkas vector from a phase-1 terminal basis and its infeasibility
/// sign pattern: y solves B^T y = pattern. Returns the vector only if it
/// verifies.
std::optional<RatVector> farkas_from_pattern(const RationalLP& lp, const Basis& basis,
                                             const std::vector<int8_t>& pattern);

/// Exact improving ray from a basis and an entering column, normalized to
/// c^T v = -1. Returns nullopt if the exact ray fails Eq-style validation
/// (wrong sign, touches a logical, or not improving).
std::optional<RatVector> ray_from_basis(const RationalLP& lp, const Basis& basis, int entering);

}  // namespace exactlp

#endif  // EXACTLP_EXACT_VERIFY_HPP_
