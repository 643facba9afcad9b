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

#ifndef EXACTLP_RATIONAL_HPP_
#define EXACTLP_RATIONAL_HPP_

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exactlp {

/// Exact rational scalar backed by GMP.
///
/// Invariants: denominator > 0 and gcd(|num|, den) = 1 after every public
/// operation. Zero is canonically 0/1. No operation ever rounds.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {  // NOLINT(google-explicit-constructor): numeric literal use is intended
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Exact value of a finite double (every finite double is rational).
  static Rational from_double(double d);

  /// Exact value of num/den given as decimal digit strings.
  static Rational from_integer_strings(std::string_view num, std::string_view den);

  static Rational power_of(long base, long exp);
  static Rational pow2(long exp) { return power_of(2, exp); }
  static Rational pow10(long exp) { return power_of(10, exp); }

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sgn() const { return mpq_sgn(q_); }

  /// True iff the denominator is of the form 2^a 5^b, i.e. the value has a
  /// finite decimal expansion.
  bool has_finite_decimal() const;

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }
  Rational inv() const;

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", or just "num" for integers. Reparsing gives the same value.
  std::string to_string() const;

  /// Exact decimal expansion, if the denominator divides a power of ten.
  std::optional<std::string> to_decimal_string() const;

  /// Nearest double, round-to-nearest-even.
  double to_double() const;

  size_t bit_size() const {
    return mpz_sizeinbase(mpq_numref(q_), 2) + mpz_sizeinbase(mpq_denref(q_), 2);
  }

  mpq_srcptr raw() const { return q_; }
  mpq_ptr raw() { return q_; }

 private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses a decimal/scientific numeral ("0.5", "-2.375", "1e-6") or a
/// fraction "a/b" into an exact Rational. Throws std::invalid_argument on a
/// malformed numeral (naming the offending token) and std::domain_error on a
/// zero denominator.
Rational parse_rational(std::string_view text);

using RatVector = std::vector<Rational>;

Rational inf_norm(const RatVector& v);
Rational max_positive_part(const RatVector& v);  // max(0, max_i v_i)
Rational dot(const RatVector& a, const RatVector& b);

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace exactlp

#endif  // EXACTLP_RATIONAL_HPP_
