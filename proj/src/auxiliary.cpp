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

#include "exactlp/auxiliary.hpp"

#include <stdexcept>
#include <tuple>

namespace exactlp {

RationalLP build_feasibility_lp(const RationalLP& lp) {
  const int n = lp.ncols(), m = lp.nrows();

  // b - A l: the right-hand side seen from the shifted origin x = l.
  RatVector al;
  lp.A.multiply(lp.lower, al);
  RatVector shifted(m);
  for (int i = 0; i < m; ++i) shifted[i] = lp.b[i] - al[i];

  std::vector<std::tuple<int, int, Rational>> trips;
  for (int j = 0; j < n; ++j) {
    auto cv = lp.A.col(j);
    for (int k = 0; k < cv.len; ++k) trips.emplace_back(cv.rows[k], j, cv.vals[k]);
  }
  for (int i = 0; i < m; ++i)
    if (!shifted[i].is_zero()) trips.emplace_back(i, n, -shifted[i]);
  trips.emplace_back(m, n, Rational(1));      // tau
  trips.emplace_back(m, n + 1, Rational(1));  // slack: tau + s = 1

  RationalLP aux;
  aux.A = SparseRationalMatrix::from_triplets(m + 1, n + 2, std::move(trips));
  aux.b.assign(m + 1, Rational());
  aux.b[m] = Rational(1);
  aux.c.assign(n + 2, Rational());
  aux.c[n] = Rational(-1);  // max tau
  aux.lower.assign(n + 2, Rational());
  return aux;
}

RationalLP build_unboundedness_lp(const RationalLP& lp) {
  const int n = lp.ncols(), m = lp.nrows();
  std::vector<std::tuple<int, int, Rational>> trips;
  for (int j = 0; j < n; ++j) {
    auto cv = lp.A.col(j);
    for (int k = 0; k < cv.len; ++k) trips.emplace_back(cv.rows[k], j, cv.vals[k]);
    if (!lp.c[j].is_zero()) trips.emplace_back(m, j, lp.c[j]);
  }
  RationalLP aux;
  aux.A = SparseRationalMatrix::from_triplets(m + 1, n, std::move(trips));
  aux.b.assign(m + 1, Rational());
  aux.b[m] = Rational(-1);  // c^T v = -1
  aux.c.assign(n, Rational());
  aux.lower.assign(n, Rational());
  return aux;
}

std::variant<Feasible, Infeasible> interpret_feasibility(const RationalLP& lp,
                                                         const Rational& tau_star,
                                                         const RatVector& xi_star) {
  if (tau_star.sgn() < 0 || tau_star > Rational(1))
    throw std::logic_error("interpret_feasibility: tau* outside [0,1]");
  if (tau_star.is_zero()) return Infeasible{};
  Feasible f;
  f.witness.resize(lp.ncols());
  for (int j = 0; j < lp.ncols(); ++j) f.witness[j] = lp.lower[j] + xi_star[j] / tau_star;
  return f;
}

}  // namespace exactlp
