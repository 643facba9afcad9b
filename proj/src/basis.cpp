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

#include "exactlp/basis.hpp"

#include <sstream>
#include <stdexcept>

namespace exactlp {

std::string Basis::serialize() const {
  std::ostringstream os;
  os << "basis";
  for (int b : basic) os << ' ' << b;
  return os.str();
}

Basis Basis::deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  is >> tag;
  if (tag != "basis") throw std::invalid_argument("Basis::deserialize: bad header");
  Basis b;
  int v;
  while (is >> v) b.basic.push_back(v);
  return b;
}

}  // namespace exactlp
