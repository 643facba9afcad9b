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

#ifndef EXACTLP_SNAPSHOT_HPP_
#define EXACTLP_SNAPSHOT_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "exactlp/basis.hpp"

namespace exactlp {

/// Basis snapshots are taken at a geometrically increasing frequency: when
/// the iteration count is a power of two, and at least every 10000
/// iterations.
inline bool snapshot_policy(long iteration, long last_snapshot) {
  bool pow2 = iteration >= 1 && (iteration & (iteration - 1)) == 0;
  return pow2 || iteration - last_snapshot >= 10000;
}

/// Restart basis after a numerical failure: the latest snapshot taken at
/// least two refactorization cycles (200 pivots) before the failure point,
/// falling back to the earliest snapshot.
std::optional<Basis> stable_snapshot(const std::vector<std::pair<long, Basis>>& snapshots,
                                     long failure_iteration);

}  // namespace exactlp

#endif  // EXACTLP_SNAPSHOT_HPP_
