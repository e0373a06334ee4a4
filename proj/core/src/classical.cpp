// Copyright 2026 The symquery Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symquery/classical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquery {

int d_complexity(const SymPartialFn& f) {
  const int n = f.n();
  if (n > kMaxEnumerationLength) {
    throw std::invalid_argument("d_complexity supports n <= " +
                                std::to_string(kMaxEnumerationLength));
  }
  // cost[ones][zeros]; -1 = not computed yet.
  std::vector<std::vector<int>> cost(n + 1, std::vector<int>(n + 1, -1));

  auto settled = [&](int ones, int zeros) {
    bool seen[2] = {false, false};
    for (int w = ones; w <= n - zeros; ++w) {
      const FnValue v = f.value_at_weight(w);
      if (v != FnValue::Undefined) seen[v == FnValue::One] = true;
    }
    return !(seen[0] && seen[1]);
  };

  // Fill by decreasing number of answered queries so both children are ready.
  for (int answered = n; answered >= 0; --answered) {
    for (int ones = 0; ones <= answered; ++ones) {
      const int zeros = answered - ones;
      if (settled(ones, zeros)) {
        cost[ones][zeros] = 0;
      } else {
        cost[ones][zeros] = 1 + std::max(cost[ones + 1][zeros], cost[ones][zeros + 1]);
      }
    }
  }
  return cost[0][0];
}

}  // namespace symquery
