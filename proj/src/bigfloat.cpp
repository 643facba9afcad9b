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

#include "exactlp/bigfloat.hpp"

#include <stdexcept>

namespace exactlp {

Rational BigFloat::to_rational() const {
  if (is_zero()) return Rational();
  if (!is_finite()) throw std::domain_error("BigFloat::to_rational: non-finite value");
  mpz_t z;
  mpz_init(z);
  mpfr_exp_t e = mpfr_get_z_2exp(z, v_);  // value = z * 2^e, exactly
  Rational r;
  mpz_set(mpq_numref(r.raw()), z);
  mpz_clear(z);
  if (e > 0)
    mpz_mul_2exp(mpq_numref(r.raw()), mpq_numref(r.raw()), static_cast<mp_bitcnt_t>(e));
  else if (e < 0)
    mpz_mul_2exp(mpq_denref(r.raw()), mpq_denref(r.raw()), static_cast<mp_bitcnt_t>(-e));
  mpq_canonicalize(r.raw());
  return r;
}

std::string BigFloat::to_string() const {
  char buf[64];
  mpfr_snprintf(buf, sizeof buf, "%.12Rg", v_);
  return buf;
}

}  // namespace exactlp
