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

#ifndef EXACTLP_SPARSE_MATRIX_HPP_
#define EXACTLP_SPARSE_MATRIX_HPP_

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace exactlp {

/// Column-major sparse matrix. Row indices are strictly increasing within a
/// column and no explicit zeros are stored. Column access is the hot path
/// (pricing and basis column gathers); rows are materialized on demand.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() : nrows_(0), ncols_(0), col_start_{0} {}
  SparseMatrix(int nrows, int ncols)
      : nrows_(nrows), ncols_(ncols), col_start_(static_cast<size_t>(ncols) + 1, 0) {}

  static SparseMatrix from_triplets(int nrows, int ncols,
                                    std::vector<std::tuple<int, int, T>> entries) {
    SparseMatrix m(nrows, ncols);
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
    });
    int prev_col = -1, prev_row = -1;
    for (auto& [r, c, v] : entries) {
      if (r < 0 || r >= nrows || c < 0 || c >= ncols)
        throw std::out_of_range("SparseMatrix: entry index out of range");
      if (c == prev_col && r == prev_row)
        throw std::invalid_argument("SparseMatrix: duplicate entry");
      prev_col = c;
      prev_row = r;
      if (is_zero_value(v)) continue;
      m.row_index_.push_back(r);
      m.value_.push_back(std::move(v));
      ++m.col_start_[static_cast<size_t>(c) + 1];
    }
    for (size_t c = 1; c < m.col_start_.size(); ++c) m.col_start_[c] += m.col_start_[c - 1];
    return m;
  }

  int nrows() const { return nrows_; }
  int ncols() const { return ncols_; }
  int nnz() const { return static_cast<int>(value_.size()); }

  struct ColView {
    const int* rows;
    const T* vals;
    int len;
  };
  ColView col(int j) const {
    assert(j >= 0 && j < ncols_);
    int b = col_start_[j], e = col_start_[j + 1];
    return {row_index_.data() + b, value_.data() + b, e - b};
  }

  /// y = A*x (dense x of length ncols, dense y of length nrows).
  template <class U>
  void multiply(const std::vector<U>& x, std::vector<U>& y) const {
    assert(static_cast<int>(x.size()) == ncols_);
    y.assign(nrows_, U{});
    for (int j = 0; j < ncols_; ++j) {
      if (is_zero_value(x[j])) continue;
      auto cv = col(j);
      for (int k = 0; k < cv.len; ++k) y[cv.rows[k]] += cv.vals[k] * x[j];
    }
  }

  /// y = A^T * x (dense x of length nrows, dense y of length ncols).
  template <class U>
  void multiply_transpose(const std::vector<U>& x, std::vector<U>& y) const {
    assert(static_cast<int>(x.size()) == nrows_);
    y.assign(ncols_, U{});
    for (int j = 0; j < ncols_; ++j) {
      auto cv = col(j);
      U s{};
      for (int k = 0; k < cv.len; ++k) s += cv.vals[k] * x[cv.rows[k]];
      y[j] = std::move(s);
    }
  }

  /// A^T_j * x for one column.
  template <class U>
  U col_dot(int j, const std::vector<U>& x) const {
    auto cv = col(j);
    U s{};
    for (int k = 0; k < cv.len; ++k) s += cv.vals[k] * x[cv.rows[k]];
    return s;
  }

  template <class F>
  auto map(F&& f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
    using R = decltype(f(std::declval<const T&>()));
    SparseMatrix<R> out(nrows_, ncols_);
    out.col_start_.assign(static_cast<size_t>(ncols_) + 1, 0);
    for (int j = 0; j < ncols_; ++j) {
      auto cv = col(j);
      for (int k = 0; k < cv.len; ++k) {
        R v = f(cv.vals[k]);
        if (is_zero_value(v)) continue;  // e.g. underflow when narrowing
        out.row_index_.push_back(cv.rows[k]);
        out.value_.push_back(std::move(v));
        ++out.col_start_[static_cast<size_t>(j) + 1];
      }
    }
    for (size_t c = 1; c < out.col_start_.size(); ++c) out.col_start_[c] += out.col_start_[c - 1];
    return out;
  }

  bool check_invariants() const {
    if (static_cast<int>(col_start_.size()) != ncols_ + 1 || col_start_[0] != 0) return false;
    for (int j = 0; j < ncols_; ++j) {
      if (col_start_[j] > col_start_[j + 1]) return false;
      for (int k = col_start_[j]; k < col_start_[j + 1]; ++k) {
        if (row_index_[k] < 0 || row_index_[k] >= nrows_) return false;
        if (k > col_start_[j] && row_index_[k] <= row_index_[k - 1]) return false;
        if (is_zero_value(value_[k])) return false;
      }
    }
    return col_start_[ncols_] == nnz();
  }

  template <class U>
  static bool is_zero_value(const U& v) {
    if constexpr (requires { v.is_zero(); })
      return v.is_zero();
    else
      return v == U{};
  }

  template <class U>
  friend class SparseMatrix;

 private:
  int nrows_, ncols_;
  std::vector<int> col_start_;
  std::vector<int> row_index_;
  std::vector<T> value_;
};

}  // namespace exactlp

#endif  // EXACTLP_SPARSE_MATRIX_HPP_
