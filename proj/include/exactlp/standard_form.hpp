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

#ifndef EXACTLP_STANDARD_FORM_HPP_
#define EXACTLP_STANDARD_FORM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "exactlp/lp_model.hpp"

namespace exactlp {

/// General LP as read from a file: ranged rows, upper/free/fixed variable
/// bounds, either objective sense. nullopt bounds are infinite.
struct GeneralLP {
  enum class Sense { kMinimize, kMaximize };

  std::string name;
  Sense sense = Sense::kMinimize;
  Rational objective_constant;
  RatVector c;
  SparseRationalMatrix A;  // m x n
  std::vector<std::optional<Rational>> row_lower, row_upper;
  std::vector<std::optional<Rational>> col_lower, col_upper;
  std::vector<std::string> row_names, col_names;

  int nrows() const { return A.nrows(); }
  int ncols() const { return A.ncols(); }
};

/// Exact affine map from standard-form solutions back to the original space.
struct VariableMap {
  struct Entry {
    enum class Kind { kDirect, kReflected, kSplit };
    Kind kind = Kind::kDirect;
    int j = -1;      // primary standard column
    int j_neg = -1;  // negative part, for kSplit
    Rational shift;  // upper bound, for kReflected: x = shift - std[j]
  };

  std::vector<Entry> entries;    // one per original column
  std::vector<int> row_of_std;   // original row per standard row, -1 for added bound rows
  int obj_sign = 1;              // -1 when the original sense was maximize
  Rational obj_shift;            // constant absorbed from substitutions
  Rational obj_constant;         // original objective constant
  int n_std = 0;

  RatVector recover_primal(const RatVector& x_std) const;
  /// Original-space objective value from the standard-form one:
  /// obj_sign * (v + obj_shift) + obj_constant.
  Rational recover_objective(const Rational& std_obj) const;
  /// Original-row duals (0 for dropped free rows).
  RatVector recover_duals(const RatVector& y_std, int n_orig_rows) const;
};

/// Rewrites a general LP into min{c^T x | Ax = b, x >= lower}: slacks for
/// inequality/ranged rows, upper bounds via x + s = u rows, free variables
/// split, upper-only variables reflected, maximization negated. Exact
/// throughout; the map recovers original-space solutions exactly.
std::pair<RationalLP, VariableMap> to_standard_form(const GeneralLP& lp);

}  // namespace exactlp

#endif  // EXACTLP_STANDARD_FORM_HPP_
