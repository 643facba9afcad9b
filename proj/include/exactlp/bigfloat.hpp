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

#ifndef EXACTLP_BIGFLOAT_HPP_
#define EXACTLP_BIGFLOAT_HPP_

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "exactlp/rational.hpp"

namespace exactlp {

/// Binary floating-point scalar with an explicit mantissa width.
///
/// Every value carries its own precision. Arithmetic rounds to nearest-even
/// at the wider of the two operand precisions, so a computation seeded with
/// p-bit data stays at p bits regardless of the precision of interspersed
/// constants.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(v_, 53); mpfr_set_zero(v_, 1); }
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(double d, mpfr_prec_t prec = 53) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
    BigFloat f(prec);
    mpfr_set_q(f.v_, q.raw(), MPFR_RNDN);
    return f;
  }

  /// Exact rational value (floats are rationals; never rounds).
  Rational to_rational() const;

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }

  BigFloat operator-() const {
    BigFloat r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat abs() const {
    BigFloat r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }

#define EXACTLP_BF_BINOP(op, fn)                                      \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r(std::max(a.prec(), b.prec()));                         \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                  \
    return r;                                                         \
  }                                                                   \
  BigFloat& operator op##=(const BigFloat& o) {                       \
    if (prec() < o.prec()) {                                          \
      BigFloat r(o.prec());                                           \
      fn(r.v_, v_, o.v_, MPFR_RNDN);                                  \
      mpfr_swap(v_, r.v_);                                            \
    } else {                                                          \
      fn(v_, v_, o.v_, MPFR_RNDN);                                    \
    }                                                                 \
    return *this;                                                     \
  }

  EXACTLP_BF_BINOP(+, mpfr_add)
  EXACTLP_BF_BINOP(-, mpfr_sub)
  EXACTLP_BF_BINOP(*, mpfr_mul)
  EXACTLP_BF_BINOP(/, mpfr_div)
#undef EXACTLP_BF_BINOP

  /// *this += a*b in one rounding at the accumulator's precision.
  void add_mul(const BigFloat& a, const BigFloat& b) {
    mpfr_prec_t p = std::max(prec(), std::max(a.prec(), b.prec()));
    if (p > prec()) {
      BigFloat r(p);
      mpfr_fma(r.v_, a.v_, b.v_, v_, MPFR_RNDN);
      mpfr_swap(v_, r.v_);
    } else {
      mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
    }
  }
  void sub_mul(const BigFloat& a, const BigFloat& b) {
    mpfr_prec_t p = std::max(prec(), std::max(a.prec(), b.prec()));
    if (p > prec()) {
      BigFloat r(p);
      mpfr_fms(r.v_, a.v_, b.v_, v_, MPFR_RNDN);
      mpfr_neg(r.v_, r.v_, MPFR_RNDN);
      mpfr_swap(v_, r.v_);
    } else {
      mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN);
      mpfr_neg(v_, v_, MPFR_RNDN);
    }
  }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_);
  }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) {
    return mpfr_greaterequal_p(a.v_, b.v_);
  }

  int cmp(double d) const { return mpfr_cmp_d(v_, d); }
  /// |*this| compared against a double magnitude.
  int cmp_abs(double d) const {
    BigFloat a = abs();
    return mpfr_cmp_d(a.v_, d);
  }

  std::string to_string() const;

 private:
  mpfr_t v_;
};

}  // namespace exactlp

#endif  // EXACTLP_BIGFLOAT_HPP_
