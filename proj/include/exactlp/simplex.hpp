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

#ifndef EXACTLP_SIMPLEX_HPP_
#define EXACTLP_SIMPLEX_HPP_

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "exactlp/basis.hpp"
#include "exactlp/float_lp.hpp"
#include "exactlp/lu.hpp"
#include "exactlp/snapshot.hpp"

namespace exactlp {

enum class FpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kNumericalFailure,
  kIterationLimit,
  kTimeLimit,
};

template <class T>
struct FpSolveOutcome {
  FpStatus status = FpStatus::kNumericalFailure;
  std::vector<T> x;  // structural primal values (Optimal)
  std::vector<T> y;  // row duals (Optimal)
  Basis basis;       // final basis, whatever the status

  std::vector<T> farkas_ray;           // infeasibility certificate candidate
  std::vector<int8_t> farkas_pattern;  // phase-1 cost per basis position (-1/0/+1)
  std::vector<T> primal_ray;           // unboundedness certificate candidate
  int unbounded_entering = -1;         // column whose ratio test found no block

  long iterations = 0;  // pivots in this call
};

struct SimplexLimits {
  long max_pivots = std::numeric_limits<long>::max();
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
};

/// Revised primal simplex over a fixed-precision scalar type, with bound
/// handling, Markowitz LU plus product-form eta updates, warm starting and
/// failure detection. A solver instance is single-threaded and keeps its
/// basis between solves, so refinement rounds and boosted retries warm-start
/// for free.
///
/// Variable indices j < n are structural; j >= n is the logical unit column
/// e_{j-n}, a zero-cost variable fixed at 0 (cold starts, basis repair,
/// structurally dependent rows). Logicals never enter the basis by pricing.
template <class T>
class SimplexSolver {
 public:
  explicit SimplexSolver(const FloatLP<T>& lp);

  /// Warm start. Out-of-range or duplicate entries are dropped and the basis
  /// padded with logicals; a singular basis is repaired the same way.
  void set_basis(const Basis& basis);
  Basis basis() const;

  /// Swaps in new rhs/objective/bounds (the error-correcting transformed
  /// problem); matrix, basis and factorization are kept.
  void update_problem(std::vector<T> b, std::vector<T> c, std::vector<T> lower);

  FpSolveOutcome<T> solve(const SimplexLimits& limits);

  long total_pivots() const { return pivots_total_; }
  const std::vector<std::pair<long, Basis>>& snapshots() const { return snapshots_; }

  /// Optional (entering, leaving) log, appended per pivot when set.
  std::vector<std::pair<int, int>>* pivot_trace = nullptr;

 private:
  enum class Feas : uint8_t { kOk, kBelow, kAbove };

  void gather_column(int var, std::vector<T>& out) const;
  bool refactorize();
  void repair_basis();
  void compute_basic_values();
  Feas classify(int pos) const;
  /// -1: drift persists after refactorization; 0: ok; 1: ok after repair
  /// (pricing data is stale, caller should restart the iteration).
  int ftran_checked(int var, std::vector<T>& w);

  const FloatLP<T>* lp_;
  int n_ = 0, m_ = 0;
  std::vector<T> b_, c_, lower_;     // active problem data (may be transformed)
  std::vector<int> basic_;           // basis position -> variable
  std::vector<int> pos_of_;          // variable -> basis position or -1
  std::vector<T> xb_;                // basic values by position
  LuFactorization<T> lu_;
  struct Eta {
    int pos;
    std::vector<T> w;
  };
  std::vector<Eta> etas_;
  bool factor_valid_ = false;

  long pivots_total_ = 0;
  long last_snapshot_iter_ = 0;
  std::vector<std::pair<long, Basis>> snapshots_;
};

extern template class SimplexSolver<double>;
extern template class SimplexSolver<BigFloat>;

}  // namespace exactlp

#endif  // EXACTLP_SIMPLEX_HPP_
