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

#ifndef SYMQUERY_IDENTITIES_HPP_
#define SYMQUERY_IDENTITIES_HPP_

#include <vector>

#include "symquery/rational.hpp"

namespace symquery {

// (p+1) C(p,l) == (l+1) C(p+1,l+1), with C(p,l) = 0 for l < 0 or p < l.
bool helper_identity(long p, long l);

// M[r][c] = C(n-r, k+1+c), r,c in 0..k.
std::vector<std::vector<BigInt>> binom_matrix(int n, int k);

// Determinant of binom_matrix(n, k), computed by Bareiss elimination.
// Requires 0 <= k and n >= 2k+1; throws std::invalid_argument otherwise.
Rational binom_det(int n, int k);

// (-1)^{k(k+5)/2} prod_{i=k+1}^{2k+1} C(n,i) / prod_{i=1}^{k} C(n,i).
Rational binom_det_closed(int n, int k);

bool check_identity(int n, int k);

// Determinant of an arbitrary square integer matrix (Bareiss with row pivoting).
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

}  // namespace symquery

#endif  // SYMQUERY_IDENTITIES_HPP_
