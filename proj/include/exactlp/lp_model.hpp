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

#ifndef EXACTLP_LP_MODEL_HPP_
#define EXACTLP_LP_MODEL_HPP_

#include <string>
#include <vector>

#include "exactlp/rational.hpp"
#include "exactlp/sparse_matrix.hpp"

namespace exactlp {

using SparseRationalMatrix = SparseMatrix<Rational>;

/// Standard-form LP: min c^T x subject to A x = b, x >= lower.
struct RationalLP {
  SparseRationalMatrix A;  // m x n
  RatVector b;             // length m
  RatVector c;             // length n
  RatVector lower;         // length n

  int nrows() const { return A.nrows(); }
  int ncols() const { return A.ncols(); }
  bool check_dimensions() const {
    return static_cast<int>(b.size()) == A.nrows() && static_cast<int>(c.size()) == A.ncols() &&
           static_cast<int>(lower.size()) == A.ncols();
  }
};

/// Candidate primal-dual pair. source_precision records the mantissa width
/// of the arithmetic that produced it; 0 means exact.
struct PrimalDualSolution {
  RatVector x;  // length n
  RatVector y;  // length m
  int source_precision = 0;
};

/// Exact constraint/bound/reduced-cost residuals of a candidate solution.
struct Residuals {
  RatVector b_hat;  // b - A x
  RatVector l_hat;  // lower - x
  RatVector c_hat;  // c - A^T y
  Rational delta_P;  // max(||b_hat||_inf, max(0, max_i l_hat_i))
  Rational delta_D;  // max(0, max_i(-c_hat_i))

  Rational max_violation() const { return max(delta_P, delta_D); }
};

/// Exact residuals of `sol` against `lp`. Slack above a lower bound is not a
/// violation: only the positive part of l_hat enters delta_P.
Residuals compute_residuals(const RationalLP& lp, const PrimalDualSolution& sol);

/// Exact primal objective c^T x.
Rational objective_value(const RationalLP& lp, const RatVector& x);

/// Exact dual objective b^T y + lower^T (c - A^T y).
Rational dual_objective_value(const RationalLP& lp, const RatVector& y);

}  // namespace exactlp

#endif  // EXACTLP_LP_MODEL_HPP_
