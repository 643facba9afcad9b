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

#include "exactlp/precision.hpp"

#include <cmath>

#include "exactlp/tolerances.hpp"

namespace exactlp {

std::optional<Precision> boost_precision(Precision p) {
  int next = p.bits == 64 ? 192 : static_cast<int>(std::lround(p.bits * 1.5));
  if (next > kMaxPrecisionBits) return std::nullopt;
  return Precision{next};
}

std::vector<int> precision_ladder() {
  std::vector<int> ladder{64};
  Precision p{64};
  while (auto nxt = boost_precision(p)) {
    p = *nxt;
    ladder.push_back(p.bits);
  }
  return ladder;
}

bool is_valid_precision(int bits) {
  for (int b : precision_ladder())
    if (b == bits) return true;
  return false;
}

ToleranceSet tolerance_set(Precision p, ToleranceMode mode, double feas_default,
                           double opt_default) {
  const double p10 = p.bits * std::log10(2.0);
  auto tol = [&](double c) { return std::pow(10.0, -std::floor(p10 * c)); };
  ToleranceSet t;
  t.zero_eps = tol(1.0);
  t.pivot_eps = tol(0.625);
  t.update_tol = tol(0.8);
  if (mode == ToleranceMode::kScaledPure) {
    // 2^(a*p/64) with 2^a the double-precision default.
    t.feas_tol = std::exp2(std::log2(feas_default) * p.bits / 64.0);
    t.opt_tol = std::exp2(std::log2(opt_default) * p.bits / 64.0);
  } else {
    t.feas_tol = feas_default;
    t.opt_tol = opt_default;
  }
  return t;
}

}  // namespace exactlp
