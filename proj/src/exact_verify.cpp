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

#include "exactlp/exact_verify.hpp"

#include <cassert>
#include <stdexcept>

namespace exactlp {
namespace {

// Dense column of the basis matrix: structural columns come from A, indices
// j >= n are unit columns.
void gather_basis_column(const RationalLP& lp, int var, std::vector<Rational>& out) {
  out.assign(lp.nrows(), Rational());
  if (var >= lp.ncols()) {
    out[var - lp.ncols()] = Rational(1);
    return;
  }
  auto cv = lp.A.col(var);
  for (int k = 0; k < cv.len; ++k) out[cv.rows[k]] = cv.vals[k];
}

std::optional<LuFactorization<Rational>> factorize_basis(const RationalLP& lp,
                                                         const Basis& basis) {
  if (basis.size() != lp.nrows()) return std::nullopt;
  LuFactorization<Rational> lu;
  auto fill = [&](int pos, std::vector<Rational>& buf) {
    gather_basis_column(lp, basis.basic[pos], buf);
  };
  if (lu.factorize(lp.nrows(), fill, 0.0, 0.0) != LuFactorization<Rational>::Status::kOk)
    return std::nullopt;
  return lu;
}

}  // namespace

std::optional<RationalLu> RationalLu::factorize(const SparseRationalMatrix& b) {
  if (b.nrows() != b.ncols()) throw std::invalid_argument("RationalLu: matrix not square");
  RationalLu out;
  auto fill = [&](int j, std::vector<Rational>& buf) {
    buf.assign(b.nrows(), Rational());
    auto cv = b.col(j);
    for (int k = 0; k < cv.len; ++k) buf[cv.rows[k]] = cv.vals[k];
  };
  if (out.lu_.factorize(b.nrows(), fill, 0.0, 0.0) != LuFactorization<Rational>::Status::kOk)
    return std::nullopt;
  return out;
}

RatVector RationalLu::solve(const RatVector& rhs) const {
  RatVector v = rhs;
  lu_.ftran(v);
  return v;
}

RatVector RationalLu::solve_transpose(const RatVector& rhs) const {
  RatVector v = rhs;
  lu_.btran(v);
  return v;
}

std::optional<PrimalDualSolution> basic_solution(const RationalLP& lp, const Basis& basis) {
  const int n = lp.ncols(), m = lp.nrows();
  auto lu = factorize_basis(lp, basis);
  if (!lu) return std::nullopt;

  RatVector rhs = lp.b;
  std::vector<bool> is_basic(n, false);
  for (int j : basis.basic)
    if (j < n) is_basic[j] = true;
  for (int j = 0; j < n; ++j) {
    if (is_basic[j] || lp.lower[j].is_zero()) continue;
    auto cv = lp.A.col(j);
    for (int k = 0; k < cv.len; ++k) rhs[cv.rows[k]] -= cv.vals[k] * lp.lower[j];
  }
  lu->ftran(rhs);  // x_B by basis position

  RatVector cb(m);
  for (int pos = 0; pos < m; ++pos) {
    int j = basis.basic[pos];
    cb[pos] = j < n ? lp.c[j] : Rational();
  }
  lu->btran(cb);  // y by row

  PrimalDualSolution sol;
  sol.x = lp.lower;
  for (int pos = 0; pos < m; ++pos) {
    int j = basis.basic[pos];
    if (j < n) sol.x[j] = rhs[pos];
    // A basic logical keeps its exact value out of x; if it is nonzero the
    // primal residual check will reject the basis downstream.
  }
  sol.y = std::move(cb);
  sol.source_precision = 0;
  return sol;
}

bool verify_optimal(const RationalLP& lp, const PrimalDualSolution& sol) {
  Residuals r = compute_residuals(lp, sol);
  if (!r.delta_P.is_zero() || !r.delta_D.is_zero()) return false;
  // Strong duality must close exactly for a certified pair.
  Rational gap = objective_value(lp, sol.x) - dual_objective_value(lp, sol.y);
  if (!gap.is_zero()) return false;
  // Complementary slackness is implied at this point; keep the explicit
  // check as a guard against residual-computation regressions.
  Rational cs;
  for (int j = 0; j < lp.ncols(); ++j) cs += (sol.x[j] - lp.lower[j]) * r.c_hat[j];
  assert(cs.is_zero());
  return true;
}

bool verify_farkas(const RationalLP& lp, const RatVector& y) {
  if (static_cast<int>(y.size()) != lp.nrows()) return false;
  RatVector aty;
  lp.A.multiply_transpose(y, aty);
  for (const auto& v : aty)
    if (v.sgn() > 0) return false;
  Rational value = dot(lp.b, y) - dot(lp.lower, aty);
  return value.sgn() > 0;
}

bool verify_unbounded(const RationalLP& lp, const RatVector& witness, const RatVector& ray) {
  if (static_cast<int>(witness.size()) != lp.ncols() ||
      static_cast<int>(ray.size()) != lp.ncols())
    return false;
  RatVector ax;
  lp.A.multiply(witness, ax);
  for (int i = 0; i < lp.nrows(); ++i)
    if (!(ax[i] == lp.b[i])) return false;
  for (int j = 0; j < lp.ncols(); ++j)
    if (witness[j] < lp.lower[j]) return false;
  lp.A.multiply(ray, ax);
  for (const auto& v : ax)
    if (!v.is_zero()) return false;
  for (const auto& v : ray)
    if (v.sgn() < 0) return false;
  return dot(lp.c, ray) == Rational(-1);
}

bool check_oracle_contract(const RationalLP& lp, const PrimalDualSolution& sol,
                           const Rational& eta, const Rational& sigma) {
  Residuals r = compute_residuals(lp, sol);
  if (inf_norm(r.b_hat) > eta) return false;          // ||Ax - b||_inf <= eta
  if (max_positive_part(r.l_hat) > eta) return false; // x >= l - eta
  for (const auto& v : r.c_hat)
    if (-v > eta) return false;  // c - A^T y >= -eta
  Rational cs;
  for (int j = 0; j < lp.ncols(); ++j) cs += (sol.x[j] - lp.lower[j]) * r.c_hat[j];
  return cs.abs() <= sigma;
}

std::optional<RatVector> farkas_from_pattern(const RationalLP& lp, const Basis& basis,
                                             const std::vector<int8_t>& pattern) {
  if (static_cast<int>(pattern.size()) != lp.nrows()) return std::nullopt;
  auto lu = factorize_basis(lp, basis);
  if (!lu) return std::nullopt;
  RatVector cb(lp.nrows());
  for (int pos = 0; pos < lp.nrows(); ++pos) cb[pos] = Rational(pattern[pos]);
  lu->btran(cb);
  if (!verify_farkas(lp, cb)) return std::nullopt;
  return cb;
}

std::optional<RatVector> ray_from_basis(const RationalLP& lp, const Basis& basis, int entering) {
  const int n = lp.ncols(), m = lp.nrows();
  if (entering < 0 || entering >= n) return std::nullopt;
  auto lu = factorize_basis(lp, basis);
  if (!lu) return std::nullopt;
  RatVector w(m);
  gather_basis_column(lp, entering, w);
  lu->ftran(w);  // by basis position

  RatVector ray(n);
  ray[entering] = Rational(1);
  for (int pos = 0; pos < m; ++pos) {
    int j = basis.basic[pos];
    if (j >= n) {
      if (!w[pos].is_zero()) return std::nullopt;  // ray would touch a logical
      continue;
    }
    ray[j] = -w[pos];
  }
  for (const auto& v : ray)
    if (v.sgn() < 0) return std::nullopt;
  Rational drop = dot(lp.c, ray);
  if (drop.sgn() >= 0) return std::nullopt;  // not improving
  Rational scale = -drop.inv();
  for (auto& v : ray) v *= scale;
  return ray;  // now c^T ray == -1 exactly
}

}  // namespace exactlp
