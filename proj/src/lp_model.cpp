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

#include "exactlp/lp_model.hpp"

#include <cassert>

namespace exactlp {

Residuals compute_residuals(const RationalLP& lp, const PrimalDualSolution& sol) {
  assert(lp.check_dimensions());
  assert(static_cast<int>(sol.x.size()) == lp.ncols());
  assert(static_cast<int>(sol.y.size()) == lp.nrows());

  Residuals r;
  lp.A.multiply(sol.x, r.b_hat);
  for (int i = 0; i < lp.nrows(); ++i) r.b_hat[i] = lp.b[i] - r.b_hat[i];

  r.l_hat.resize(sol.x.size());
  for (int j = 0; j < lp.ncols(); ++j) r.l_hat[j] = lp.lower[j] - sol.x[j];

  lp.A.multiply_transpose(sol.y, r.c_hat);
  for (int j = 0; j < lp.ncols(); ++j) r.c_hat[j] = lp.c[j] - r.c_hat[j];

  r.delta_P = max(inf_norm(r.b_hat), max_positive_part(r.l_hat));
  RatVector neg_c(r.c_hat.size());
  for (size_t j = 0; j < r.c_hat.size(); ++j) neg_c[j] = -r.c_hat[j];
  r.delta_D = max_positive_part(neg_c);
  return r;
}

Rational objective_value(const RationalLP& lp, const RatVector& x) { return dot(lp.c, x); }

Rational dual_objective_value(const RationalLP& lp, const RatVector& y) {
  RatVector aty;
  lp.A.multiply_transpose(y, aty);
  Rational v = dot(lp.b, y);
  for (int j = 0; j < lp.ncols(); ++j) v += lp.lower[j] * (lp.c[j] - aty[j]);
  return v;
}

}  // namespace exactlp
