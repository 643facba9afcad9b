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

#include "exactlp/standard_form.hpp"

#include <stdexcept>
#include <tuple>

namespace exactlp {

RatVector VariableMap::recover_primal(const RatVector& x_std) const {
  RatVector x(entries.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    switch (e.kind) {
      case Entry::Kind::kDirect:
        x[i] = x_std[e.j];
        break;
      case Entry::Kind::kReflected:
        x[i] = e.shift - x_std[e.j];
        break;
      case Entry::Kind::kSplit:
        x[i] = x_std[e.j] - x_std[e.j_neg];
        break;
    }
  }
  return x;
}

Rational VariableMap::recover_objective(const Rational& std_obj) const {
  Rational v = std_obj + obj_shift;
  if (obj_sign < 0) v = -v;
  return v + obj_constant;
}

RatVector VariableMap::recover_duals(const RatVector& y_std, int n_orig_rows) const {
  RatVector y(n_orig_rows);
  for (size_t i = 0; i < row_of_std.size(); ++i)
    if (row_of_std[i] >= 0) {
      y[row_of_std[i]] = y_std[i];
      if (obj_sign < 0) y[row_of_std[i]] = -y[row_of_std[i]];
    }
  return y;
}

std::pair<RationalLP, VariableMap> to_standard_form(const GeneralLP& lp) {
  const int n = lp.ncols(), m = lp.nrows();
  if (static_cast<int>(lp.c.size()) != n || static_cast<int>(lp.col_lower.size()) != n ||
      static_cast<int>(lp.col_upper.size()) != n || static_cast<int>(lp.row_lower.size()) != m ||
      static_cast<int>(lp.row_upper.size()) != m)
    throw std::invalid_argument("to_standard_form: inconsistent dimensions");

  VariableMap map;
  map.entries.resize(n);
  map.obj_sign = lp.sense == GeneralLP::Sense::kMaximize ? -1 : 1;
  map.obj_constant = lp.objective_constant;

  RatVector obj = lp.c;
  if (map.obj_sign < 0)
    for (auto& v : obj) v = -v;

  // Column plan. Reflected columns shift constants into the row bounds.
  struct Col {
    Rational cost;
    Rational lower;
  };
  std::vector<Col> cols;
  std::vector<std::pair<int, Rational>> pending_upper;  // (std col, upper bound)
  std::vector<Rational> row_shift(m);                   // subtracted from both row bounds
  std::vector<std::tuple<int, int, Rational>> trips;    // (row, std col, value)

  for (int j = 0; j < n; ++j) {
    const auto& lo = lp.col_lower[j];
    const auto& up = lp.col_upper[j];
    auto cv = lp.A.col(j);
    if (lo.has_value()) {
      int k = static_cast<int>(cols.size());
      cols.push_back({obj[j], *lo});
      map.entries[j] = {VariableMap::Entry::Kind::kDirect, k, -1, Rational()};
      for (int t = 0; t < cv.len; ++t) trips.emplace_back(cv.rows[t], k, cv.vals[t]);
      if (up.has_value()) pending_upper.emplace_back(k, *up);
    } else if (up.has_value()) {
      // x = up - z with z >= 0
      int k = static_cast<int>(cols.size());
      cols.push_back({-obj[j], Rational()});
      map.entries[j] = {VariableMap::Entry::Kind::kReflected, k, -1, *up};
      map.obj_shift += obj[j] * *up;
      for (int t = 0; t < cv.len; ++t) {
        trips.emplace_back(cv.rows[t], k, -cv.vals[t]);
        row_shift[cv.rows[t]] += cv.vals[t] * *up;
      }
    } else {
      // free: x = xp - xm
      int kp = static_cast<int>(cols.size());
      cols.push_back({obj[j], Rational()});
      int km = static_cast<int>(cols.size());
      cols.push_back({-obj[j], Rational()});
      map.entries[j] = {VariableMap::Entry::Kind::kSplit, kp, km, Rational()};
      for (int t = 0; t < cv.len; ++t) {
        trips.emplace_back(cv.rows[t], kp, cv.vals[t]);
        trips.emplace_back(cv.rows[t], km, -cv.vals[t]);
      }
    }
  }

  // Rows: equalities stay; anything else gets a bounded slack t with
  // a^T x - t = 0 and t in [rl, ru], whose own bounds are then treated like
  // variable bounds above.
  std::vector<int> std_row_of(m, -1);
  RatVector rhs;
  for (int i = 0; i < m; ++i) {
    auto rl = lp.row_lower[i];
    auto ru = lp.row_upper[i];
    if (rl.has_value()) *rl -= row_shift[i];
    if (ru.has_value()) *ru -= row_shift[i];
    if (!rl.has_value() && !ru.has_value()) continue;  // free row: no constraint

    int si = static_cast<int>(rhs.size());
    std_row_of[i] = si;
    map.row_of_std.push_back(i);
    if (rl.has_value() && ru.has_value() && *rl == *ru) {
      rhs.push_back(*rl);
      continue;
    }
    int k = static_cast<int>(cols.size());
    if (rl.has_value()) {
      cols.push_back({Rational(), *rl});
      trips.emplace_back(i, k, Rational(-1));
      rhs.push_back(Rational());
      if (ru.has_value()) pending_upper.emplace_back(k, *ru);
    } else {
      // <= row: a^T x + s = ru, s >= 0
      cols.push_back({Rational(), Rational()});
      trips.emplace_back(i, k, Rational(1));
      rhs.push_back(*ru);
    }
  }

  // Upper bounds become fresh rows x + s = u. Their indices are provisional
  // (offset by m) until original rows are compacted below.
  const int n_kept = static_cast<int>(rhs.size());
  int n_upper = 0;
  for (auto& [k, u] : pending_upper) {
    int k2 = static_cast<int>(cols.size());
    cols.push_back({Rational(), Rational()});
    trips.emplace_back(m + n_upper, k, Rational(1));
    trips.emplace_back(m + n_upper, k2, Rational(1));
    rhs.push_back(u);
    map.row_of_std.push_back(-1);
    ++n_upper;
  }
  const int m_std = n_kept + n_upper;

  // Compact row indices: kept original rows first, then bound rows; entries
  // of dropped free rows vanish.
  std::vector<std::tuple<int, int, Rational>> kept;
  kept.reserve(trips.size());
  for (auto& [r, cidx, v] : trips) {
    if (r < m) {
      if (std_row_of[r] < 0) continue;
      kept.emplace_back(std_row_of[r], cidx, std::move(v));
    } else {
      kept.emplace_back(n_kept + (r - m), cidx, std::move(v));
    }
  }
  trips = std::move(kept);

  RationalLP out;
  out.b = std::move(rhs);
  out.c.reserve(cols.size());
  out.lower.reserve(cols.size());
  for (auto& cdef : cols) {
    out.c.push_back(std::move(cdef.cost));
    out.lower.push_back(std::move(cdef.lower));
  }
  out.A = SparseRationalMatrix::from_triplets(m_std, static_cast<int>(cols.size()),
                                              std::move(trips));
  map.n_std = out.ncols();
  return {std::move(out), std::move(map)};
}

}  // namespace exactlp
