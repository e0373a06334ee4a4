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

#ifndef SYMQUERY_SIMPLEX_HPP_
#define SYMQUERY_SIMPLEX_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symquery/rational.hpp"

namespace symquery {

// One two-sided constraint lower <= coeffs . c <= upper. An equality is
// expressed with lower == upper.
struct BoundedRow {
  std::vector<Rational> coeffs;
  Rational lower;
  Rational upper;
};

// Decides feasibility of a system of BoundedRow constraints over free
// (sign-unrestricted) variables c_0..c_{num_vars-1}, in exact arithmetic.
//
// The system is rewritten in standard form (c = u - v with u, v >= 0, one
// slack per inequality side) and solved with a Phase-I simplex that minimises
// the sum of artificial variables. Pivoting follows Bland's rule, so the
// method terminates on degenerate systems. Returns the basic feasible point
// the simplex lands on, or nullopt when the system is infeasible.
//
// Throws std::invalid_argument if a row has the wrong width or lower > upper.
std::optional<std::vector<Rational>> find_feasible_point(std::span<const BoundedRow> rows,
                                                         std::size_t num_vars);

}  // namespace symquery

#endif  // SYMQUERY_SIMPLEX_HPP_
