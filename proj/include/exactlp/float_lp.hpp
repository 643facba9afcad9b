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

#ifndef EXACTLP_FLOAT_LP_HPP_
#define EXACTLP_FLOAT_LP_HPP_

#include <cmath>
#include <vector>

#include "exactlp/bigfloat.hpp"
#include "exactlp/lp_model.hpp"
#include "exactlp/precision.hpp"
#include "exactlp/tolerances.hpp"

namespace exactlp {

/// Glue between the generic simplex kernel and its two scalar types:
/// hardware doubles (the 64-bit rung) and MPFR floats (all wider rungs).
template <class T>
struct FloatTraits;

template <>
struct FloatTraits<double> {
  static double from_rational(const Rational& q, int /*bits*/) { return q.to_double(); }
  static Rational to_rational(double v) { return Rational::from_double(v); }
  static double zero(int /*bits*/) { return 0.0; }
  static double from_double(double v) { return v; }
  static double abs(double v) { return v < 0 ? -v : v; }
  static double to_double(double v) { return v; }
  static bool is_finite(double v) { return std::isfinite(v); }
  static void add_mul(double& acc, double a, double b) { acc += a * b; }
  static void sub_mul(double& acc, double a, double b) { acc -= a * b; }
  static int cmp(double a, double b) { return a < b ? -1 : (a > b ? 1 : 0); }
  static int cmp_abs(double a, double b) { return cmp(a < 0 ? -a : a, b); }
};

template <>
struct FloatTraits<BigFloat> {
  static BigFloat from_rational(const Rational& q, int bits) {
    return BigFloat::from_rational(q, bits);
  }
  static Rational to_rational(const BigFloat& v) { return v.to_rational(); }
  static BigFloat zero(int bits) { return BigFloat(static_cast<mpfr_prec_t>(bits)); }
  static BigFloat from_double(double v) { return BigFloat(v); }
  static BigFloat abs(const BigFloat& v) { return v.abs(); }
  static double to_double(const BigFloat& v) { return v.to_double(); }
  static bool is_finite(const BigFloat& v) { return v.is_finite(); }
  static void add_mul(BigFloat& acc, const BigFloat& a, const BigFloat& b) { acc.add_mul(a, b); }
  static void sub_mul(BigFloat& acc, const BigFloat& a, const BigFloat& b) { acc.sub_mul(a, b); }
  static int cmp(const BigFloat& a, double b) { return a.cmp(b); }
  static int cmp_abs(const BigFloat& a, double b) { return a.cmp_abs(b); }
};

/// Round-to-nearest image of a rational LP at one precision, together with
/// the tolerance set active there.
template <class T>
struct FloatLP {
  SparseMatrix<T> A;
  std::vector<T> b, c, lower;
  Precision precision;
  ToleranceSet tolerances;

  int nrows() const { return A.nrows(); }
  int ncols() const { return A.ncols(); }
};

template <class T>
std::vector<T> round_vector(const RatVector& v, int bits) {
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(FloatTraits<T>::from_rational(q, bits));
  return out;
}

template <class T>
FloatLP<T> round_lp(const RationalLP& lp, Precision p,
                    ToleranceMode mode = ToleranceMode::kCombined,
                    double feas_default = kDefaultFeasTol, double opt_default = kDefaultOptTol) {
  FloatLP<T> f;
  f.A = lp.A.map([&](const Rational& q) { return FloatTraits<T>::from_rational(q, p.bits); });
  f.b = round_vector<T>(lp.b, p.bits);
  f.c = round_vector<T>(lp.c, p.bits);
  f.lower = round_vector<T>(lp.lower, p.bits);
  f.precision = p;
  f.tolerances = tolerance_set(p, mode, feas_default, opt_default);
  return f;
}

}  // namespace exactlp

#endif  // EXACTLP_FLOAT_LP_HPP_
