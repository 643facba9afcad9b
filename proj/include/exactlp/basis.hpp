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

#ifndef EXACTLP_BASIS_HPP_
#define EXACTLP_BASIS_HPP_

#include <string>
#include <vector>

namespace exactlp {

/// Simplex basis: the ordered list of basic variable indices (one per row).
/// Every other variable is nonbasic at its lower bound. An index j >= n
/// denotes the unit column e_{j-n} (a zero-cost logical fixed at 0), used for
/// cold starts, basis repair and structurally dependent rows.
struct Basis {
  std::vector<int> basic;

  int size() const { return static_cast<int>(basic.size()); }
  bool is_basic(int j) const {
    for (int b : basic)
      if (b == j) return true;
    return false;
  }
  bool has_logical(int n) const {
    for (int b : basic)
      if (b >= n) return true;
    return false;
  }

  /// All-logical basis for an m-row problem with n structural columns.
  static Basis logical(int n, int m) {
    Basis b;
    b.basic.reserve(m);
    for (int i = 0; i < m; ++i) b.basic.push_back(n + i);
    return b;
  }

  std::string serialize() const;
  static Basis deserialize(const std::string& text);

  friend bool operator==(const Basis& a, const Basis& b) { return a.basic == b.basic; }
};

}  // namespace exactlp

#endif  // EXACTLP_BASIS_HPP_
