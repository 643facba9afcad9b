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

#include "exactlp/lu.hpp"

#include <algorithm>
#include <numeric>

namespace exactlp {
namespace {

inline void sub_mul_into(double& w, const double& f, const double& u) { w -= f * u; }
inline void sub_mul_into(BigFloat& w, const BigFloat& f, const BigFloat& u) { w.sub_mul(f, u); }
inline void sub_mul_into(Rational& w, const Rational& f, const Rational& u) { w -= f * u; }

}  // namespace

template <class T>
typename LuFactorization<T>::Status LuFactorization<T>::factorize(
    int m, const std::function<void(int, std::vector<T>&)>& fill_col, double pivot_eps,
    double zero_eps) {
  using S = LuScalar<T>;
  m_ = m;
  rank_ = 0;
  zero_eps_ = zero_eps;
  pivot_row_.assign(m, -1);
  pivot_col_.assign(m, -1);
  unpivoted_rows_.clear();
  unpivoted_cols_.clear();
  w_.assign(static_cast<size_t>(m) * m, T{});

  std::vector<T> colbuf(m);
  for (int j = 0; j < m; ++j) {
    fill_col(j, colbuf);
    for (int i = 0; i < m; ++i)
      if (!S::negligible(colbuf[i], zero_eps)) at(i, j) = colbuf[i];
  }

  std::vector<bool> row_active(m, true), col_active(m, true);
  std::vector<int> rowcount(m, 0), colcount(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!S::negligible(at(i, j), zero_eps)) {
        ++rowcount[i];
        ++colcount[j];
      }

  std::vector<int> col_order(m);
  std::iota(col_order.begin(), col_order.end(), 0);

  for (int k = 0; k < m; ++k) {
    // Markowitz search: minimize (r-1)(c-1) over admissible entries, prefer
    // the numerically strongest on ties. Singleton rows/columns give score 0
    // and are taken outright; otherwise the scan walks columns in increasing
    // count order and stops once counts alone rule out an improvement.
    long best_score = -1;
    int best_i = -1, best_j = -1;
    auto consider = [&](int i, int j) {
      const T& v = at(i, j);
      if (!S::admissible(v, pivot_eps)) return;
      long score = static_cast<long>(rowcount[i] - 1) * (colcount[j] - 1);
      if (best_score < 0 || score < best_score ||
          (score == best_score && S::prefer(v, at(best_i, best_j)))) {
        best_score = score;
        best_i = i;
        best_j = j;
      }
    };

    int min_rowcount = m + 1;
    for (int i = 0; i < m; ++i) {
      if (!row_active[i]) continue;
      min_rowcount = std::min(min_rowcount, rowcount[i]);
      if (rowcount[i] == 1)
        for (int j = 0; j < m; ++j)
          if (col_active[j] && !S::negligible(at(i, j), zero_eps)) consider(i, j);
    }
    if (best_score != 0) {
      for (int j = 0; j < m; ++j) {
        if (!col_active[j] || colcount[j] != 1) continue;
        for (int i = 0; i < m; ++i)
          if (row_active[i] && !S::negligible(at(i, j), zero_eps)) consider(i, j);
        if (best_score == 0) break;
      }
    }
    if (best_score != 0) {
      std::sort(col_order.begin(), col_order.end(), [&](int a, int b) {
        bool aa = col_active[a], bb = col_active[b];
        if (aa != bb) return aa;
        if (colcount[a] != colcount[b]) return colcount[a] < colcount[b];
        return a < b;
      });
      int scanned_with_candidates = 0;
      for (int j : col_order) {
        if (!col_active[j]) break;
        long lower_bound = static_cast<long>(colcount[j] - 1) * (min_rowcount - 1);
        if (best_score >= 0 && (lower_bound > best_score || scanned_with_candidates >= 8)) break;
        long before = best_score;
        for (int i = 0; i < m; ++i)
          if (row_active[i]) consider(i, j);
        if (best_score != before || before < 0) ++scanned_with_candidates;
      }
    }
    if (best_i < 0) break;  // no admissible pivot in the active submatrix

    const int p = best_i, c = best_j;
    pivot_row_[k] = p;
    pivot_col_[k] = c;
    row_active[p] = false;
    col_active[c] = false;
    ++rank_;

    for (int j = 0; j < m; ++j)
      if (col_active[j] && !S::negligible(at(p, j), zero_eps)) --colcount[j];
    for (int i = 0; i < m; ++i)
      if (row_active[i] && !S::negligible(at(i, c), zero_eps)) --rowcount[i];

    const T piv = at(p, c);
    for (int i = 0; i < m; ++i) {
      if (!row_active[i]) continue;
      if (S::negligible(at(i, c), zero_eps)) continue;
      T f = at(i, c) / piv;
      at(i, c) = f;  // keep the multiplier in place
      for (int j = 0; j < m; ++j) {
        if (!col_active[j]) continue;
        const T& u = at(p, j);
        if (S::negligible(u, zero_eps)) continue;
        T& w = at(i, j);
        bool was = !S::negligible(w, zero_eps);
        sub_mul_into(w, f, u);
        bool now = !S::negligible(w, zero_eps);
        if (!now) w = T{};  // flush cancellation noise
        if (was && !now) {
          --rowcount[i];
          --colcount[j];
        } else if (!was && now) {
          ++rowcount[i];
          ++colcount[j];
        }
      }
    }
  }

  if (rank_ < m) {
    std::vector<bool> rp(m, false), cp(m, false);
    for (int k = 0; k < rank_; ++k) {
      rp[pivot_row_[k]] = true;
      cp[pivot_col_[k]] = true;
    }
    for (int i = 0; i < m; ++i) {
      if (!rp[i]) unpivoted_rows_.push_back(i);
      if (!cp[i]) unpivoted_cols_.push_back(i);
    }
    return Status::kSingular;
  }
  return Status::kOk;
}

template <class T>
void LuFactorization<T>::ftran(std::vector<T>& v) const {
  // L solve in pivot order, then U back-substitution; result lands on
  // column indices.
  for (int k = 0; k < rank_; ++k) {
    const T t = v[pivot_row_[k]];
    if (LuScalar<T>::negligible(t, zero_eps_)) continue;
    for (int s = k + 1; s < rank_; ++s) {
      const T& f = at(pivot_row_[s], pivot_col_[k]);
      if (LuScalar<T>::negligible(f, zero_eps_)) continue;
      sub_mul_into(v[pivot_row_[s]], f, t);
    }
  }
  std::vector<T> x(m_, T{});
  for (int k = rank_ - 1; k >= 0; --k) {
    T s = v[pivot_row_[k]];
    for (int t = k + 1; t < rank_; ++t) {
      const T& u = at(pivot_row_[k], pivot_col_[t]);
      if (LuScalar<T>::negligible(u, zero_eps_)) continue;
      sub_mul_into(s, u, x[pivot_col_[t]]);
    }
    x[pivot_col_[k]] = s / at(pivot_row_[k], pivot_col_[k]);
  }
  v = std::move(x);
}

template <class T>
void LuFactorization<T>::btran(std::vector<T>& v) const {
  // U^T forward solve over pivot steps, then L^T backward; result lands on
  // row indices.
  std::vector<T> w(m_, T{});
  for (int k = 0; k < rank_; ++k) {
    T s = v[pivot_col_[k]];
    for (int t = 0; t < k; ++t) {
      const T& u = at(pivot_row_[t], pivot_col_[k]);
      if (LuScalar<T>::negligible(u, zero_eps_)) continue;
      sub_mul_into(s, u, w[t]);
    }
    w[k] = s / at(pivot_row_[k], pivot_col_[k]);
  }
  std::vector<T> x(m_, T{});
  for (int k = rank_ - 1; k >= 0; --k) {
    T s = std::move(w[k]);
    for (int t = k + 1; t < rank_; ++t) {
      const T& f = at(pivot_row_[t], pivot_col_[k]);
      if (LuScalar<T>::negligible(f, zero_eps_)) continue;
      sub_mul_into(s, f, x[pivot_row_[t]]);
    }
    x[pivot_row_[k]] = std::move(s);
  }
  v = std::move(x);
}

template <class T>
T LuFactorization<T>::determinant() const {
  if (rank_ < m_) return T{};
  T det = at(pivot_row_[0], pivot_col_[0]);
  for (int k = 1; k < rank_; ++k) det = det * at(pivot_row_[k], pivot_col_[k]);
  // Sign of the combined row/column permutation.
  auto parity = [m = m_](const std::vector<int>& perm) {
    std::vector<bool> seen(m, false);
    int swaps = 0;
    for (int s = 0; s < m; ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (int t = s; !seen[t]; t = perm[t]) {
        seen[t] = true;
        ++len;
      }
      swaps += len - 1;
    }
    return swaps & 1;
  };
  if ((parity(pivot_row_) ^ parity(pivot_col_)) != 0) det = -det;
  return det;
}

template class LuFactorization<double>;
template class LuFactorization<BigFloat>;
template class LuFactorization<Rational>;

}  // namespace exactlp
