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

#ifndef EXACTLP_LU_HPP_
#define EXACTLP_LU_HPP_

#include <cmath>
#include <functional>
#include <vector>

#include "exactlp/bigfloat.hpp"
#include "exactlp/rational.hpp"

namespace exactlp {

/// Scalar-specific pivot admissibility and bookkeeping for the LU.
/// Floating-point scalars reject pivots below pivot_eps and flush values
/// below zero_eps; Rational admits any exact nonzero and prefers small
/// operands to limit bit growth.
template <class T>
struct LuScalar;

template <>
struct LuScalar<double> {
  static bool admissible(double v, double pivot_eps) { return std::fabs(v) > pivot_eps; }
  static bool negligible(double v, double zero_eps) { return std::fabs(v) <= zero_eps; }
  /// True if a is a preferable pivot to b among equal Markowitz counts.
  static bool prefer(double a, double b) { return std::fabs(a) > std::fabs(b); }
};

template <>
struct LuScalar<BigFloat> {
  static bool admissible(const BigFloat& v, double pivot_eps) { return v.cmp_abs(pivot_eps) > 0; }
  static bool negligible(const BigFloat& v, double zero_eps) { return v.cmp_abs(zero_eps) <= 0; }
  static bool prefer(const BigFloat& a, const BigFloat& b) {
    return a.abs() > b.abs();
  }
};

template <>
struct LuScalar<Rational> {
  static bool admissible(const Rational& v, double) { return !v.is_zero(); }
  static bool negligible(const Rational& v, double) { return v.is_zero(); }
  static bool prefer(const Rational& a, const Rational& b) { return a.bit_size() < b.bit_size(); }
};

/// Dense-storage LU with Markowitz fill-minimizing pivot search:
/// P B Q = L U. Candidates below pivot_eps are rejected; if the remaining
/// active submatrix has no admissible pivot the factorization stops and
/// reports the unpivoted rows/columns so the caller can repair the basis.
template <class T>
class LuFactorization {
 public:
  enum class Status { kOk, kSingular };

  /// fill_col(j, buf) writes dense column j of B into buf (length m).
  Status factorize(int m, const std::function<void(int, std::vector<T>&)>& fill_col,
                   double pivot_eps, double zero_eps);

  /// Solves B x = v. Input by row index, output by column index.
  void ftran(std::vector<T>& v) const;
  /// Solves B^T x = v. Input by column index, output by row index.
  void btran(std::vector<T>& v) const;

  int dim() const { return m_; }
  bool ok() const { return rank_ == m_; }
  const std::vector<int>& unpivoted_rows() const { return unpivoted_rows_; }
  const std::vector<int>& unpivoted_cols() const { return unpivoted_cols_; }

  /// Product of U's diagonal with the permutation sign: det(B).
  T determinant() const;

 private:
  T& at(int i, int j) { return w_[static_cast<size_t>(i) * m_ + j]; }
  const T& at(int i, int j) const { return w_[static_cast<size_t>(i) * m_ + j]; }

  int m_ = 0;
  int rank_ = 0;
  std::vector<T> w_;  // multipliers below the pivot structure, U on and above
  std::vector<int> pivot_row_, pivot_col_;
  std::vector<int> unpivoted_rows_, unpivoted_cols_;
  double zero_eps_ = 0.0;
};

extern template class LuFactorization<double>;
extern template class LuFactorization<BigFloat>;
extern template class LuFactorization<Rational>;

}  // namespace exactlp

#endif  // EXACTLP_LU_HPP_
