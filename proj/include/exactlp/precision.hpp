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

#ifndef EXACTLP_PRECISION_HPP_
#define EXACTLP_PRECISION_HPP_

#include <optional>
#include <vector>

namespace exactlp {

/// Mantissa width of the working floating-point arithmetic. 64 denotes
/// hardware doubles (53-bit mantissa; the label keeps the conventional
/// word-size counting). Wider levels run on MPFR with exactly `bits` of
/// mantissa.
struct Precision {
  int bits = 64;

  bool is_double() const { return bits == 64; }
  friend bool operator==(Precision a, Precision b) { return a.bits == b.bits; }
};

/// Hard ceiling; beyond it double-expressed tolerances would flush to zero.
inline constexpr int kMaxPrecisionBits = 1000;

/// Next rung of the ladder: 64 -> 192, then *1.5 each step
/// (64, 192, 288, 432, 648, 972). Returns nullopt once the next step would
/// exceed kMaxPrecisionBits.
std::optional<Precision> boost_precision(Precision p);

/// The full ladder reachable from 64 bits.
std::vector<int> precision_ladder();

bool is_valid_precision(int bits);

}  // namespace exactlp

#endif  // EXACTLP_PRECISION_HPP_
