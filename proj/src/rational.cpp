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

#include "exactlp/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace exactlp {

Rational::Rational(long num, long den) {
  mpq_init(q_);
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_set_si(q_, num, 1);
  mpz_set_si(mpq_denref(q_), den);
  mpq_canonicalize(q_);
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("Rational::from_double: non-finite value");
  Rational r;
  mpq_set_d(r.q_, d);
  return r;
}

Rational Rational::from_integer_strings(std::string_view num, std::string_view den) {
  Rational r;
  if (mpz_set_str(mpq_numref(r.q_), std::string(num).c_str(), 10) != 0)
    throw std::invalid_argument("Rational: bad integer '" + std::string(num) + "'");
  if (mpz_set_str(mpq_denref(r.q_), std::string(den).c_str(), 10) != 0)
    throw std::invalid_argument("Rational: bad integer '" + std::string(den) + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0) throw std::domain_error("Rational: zero denominator");
  mpq_canonicalize(r.q_);
  return r;
}

Rational Rational::power_of(long base, long exp) {
  Rational r;
  mpz_t p;
  mpz_init(p);
  mpz_ui_pow_ui(p, static_cast<unsigned long>(base < 0 ? -base : base),
                static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (base < 0 && (exp & 1)) mpz_neg(p, p);
  if (exp >= 0)
    mpz_set(mpq_numref(r.q_), p);
  else
    mpz_set(mpq_denref(r.q_), p);
  mpz_clear(p);
  mpq_canonicalize(r.q_);
  return r;
}

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

bool Rational::has_finite_decimal() const {
  mpz_t d;
  mpz_init_set(d, mpq_denref(q_));
  while (mpz_divisible_ui_p(d, 2)) mpz_divexact_ui(d, d, 2);
  while (mpz_divisible_ui_p(d, 5)) mpz_divexact_ui(d, d, 5);
  bool ok = mpz_cmp_ui(d, 1) == 0;
  mpz_clear(d);
  return ok;
}

std::string Rational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, std::strlen(s) + 1);
  return out;
}

std::optional<std::string> Rational::to_decimal_string() const {
  if (!has_finite_decimal()) return std::nullopt;
  // Scale so that den * 2^a * 5^b = 10^k, then print num' with a point.
  mpz_t den;
  mpz_init_set(den, mpq_denref(q_));
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den, 2)) {
    mpz_divexact_ui(den, den, 2);
    ++twos;
  }
  while (mpz_divisible_ui_p(den, 5)) {
    mpz_divexact_ui(den, den, 5);
    ++fives;
  }
  mpz_clear(den);
  unsigned long k = twos > fives ? twos : fives;
  mpz_t scaled, pow;
  mpz_init(scaled);
  mpz_init(pow);
  mpz_ui_pow_ui(pow, 10, k);
  mpz_mul(scaled, mpq_numref(q_), pow);
  mpz_divexact(scaled, scaled, mpq_denref(q_));
  char* s = mpz_get_str(nullptr, 10, scaled);
  std::string digits(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, std::strlen(s) + 1);
  mpz_clear(scaled);
  mpz_clear(pow);

  bool neg = !digits.empty() && digits[0] == '-';
  std::string mag = neg ? digits.substr(1) : digits;
  std::string out;
  if (k == 0) {
    out = mag;
  } else {
    if (mag.size() <= k) mag.insert(0, k + 1 - mag.size(), '0');
    out = mag.substr(0, mag.size() - k) + "." + mag.substr(mag.size() - k);
  }
  return (neg ? "-" : "") + out;
}

double Rational::to_double() const {
  // mpq_get_d truncates; go through MPFR for round-to-nearest-even.
  mpfr_t f;
  mpfr_init2(f, 53);
  mpfr_set_q(f, q_, MPFR_RNDN);
  double d = mpfr_get_d(f, MPFR_RNDN);
  mpfr_clear(f);
  return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

[[noreturn]] void bad_numeral(std::string_view text) {
  throw std::invalid_argument("parse_rational: malformed numeral '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_numeral(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    auto is_int = [](std::string_view s) {
      if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      return true;
    };
    if (!is_int(num) || !is_int(den)) bad_numeral(text);
    std::string n(num);
    if (n[0] == '+') n.erase(0, 1);
    std::string d(den);
    if (d[0] == '+') d.erase(0, 1);
    return Rational::from_integer_strings(n, d);
  }

  // [+-]? digits? [. digits?] [eE [+-]? digits], with at least one digit in
  // the mantissa.
  size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::string mantissa;
  long frac_digits = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa += c;
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) bad_numeral(text);
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) bad_numeral(text);
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) bad_numeral(text);
      exp10 = exp10 * 10 + (text[i] - '0');
      if (exp10 > 1000000) bad_numeral(text);
    }
    if (eneg) exp10 = -exp10;
  }
  if (i != text.size()) bad_numeral(text);

  if (mantissa.empty()) mantissa = "0";
  Rational r = Rational::from_integer_strings(mantissa, "1");
  long e = exp10 - frac_digits;
  if (e != 0) r *= Rational::pow10(e);
  if (neg) r = -r;
  return r;
}

Rational inf_norm(const RatVector& v) {
  Rational m;
  for (const auto& x : v) {
    Rational a = x.abs();
    if (m < a) m = a;
  }
  return m;
}

Rational max_positive_part(const RatVector& v) {
  Rational m;
  for (const auto& x : v)
    if (m < x) m = x;
  return m;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace exactlp
