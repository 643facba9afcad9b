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

#include "exactlp/snapshot.hpp"

namespace exactlp {

std::optional<Basis> stable_snapshot(const std::vector<std::pair<long, Basis>>& snapshots,
                                     long failure_iteration) {
  if (snapshots.empty()) return std::nullopt;
  const std::pair<long, Basis>* pick = nullptr;
  for (const auto& s : snapshots) {
    if (s.first <= failure_iteration - 200) pick = &s;
  }
  if (pick == nullptr) pick = &snapshots.front();
  return pick->second;
}

}  // namespace exactlp
