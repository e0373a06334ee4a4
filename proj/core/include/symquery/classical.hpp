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

#ifndef SYMQUERY_CLASSICAL_HPP_
#define SYMQUERY_CLASSICAL_HPP_

#include "symquery/symfun.hpp"

namespace symquery {

// Deterministic decision-tree complexity D(f). Because f is symmetric, the
// optimal tree depends only on how many 1s and 0s have been seen so far, so
// this is a minimax over those counts. Undefined weights are ignored.
//
// Throws std::invalid_argument for n > kMaxEnumerationLength.
int d_complexity(const SymPartialFn& f);

}  // namespace symquery

#endif  // SYMQUERY_CLASSICAL_HPP_
