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

// Reference implementations used only by the tests. Each one computes its
// answer by a different route than the library code it checks.

#ifndef SYMQUERY_TESTS_ORACLES_HPP_
#define SYMQUERY_TESTS_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "symquery/qsim.hpp"
#include "symquery/rational.hpp"
#include "symquery/symfun.hpp"

namespace symquery::oracle {

// Xquery final amplitudes from the closed form: (0,0) gets (m-2t)/m and the
// pair (i,j) gets ((-1)^{x_i} - (-1)^{x_j}) / m. Zero amplitudes are omitted.
std::map<BasisLabel, Rational> xquery_amplitudes(const Bits& x);

// sqrt(n) times the Grover-1 final amplitude at index i:
// 2s/n - (-1)^{x_i}, s = sum_j (-1)^{x_j}. Entry i-1 holds index i.
std::vector<Rational> grover_scaled_amplitudes(const Bits& x);

// Squared amplitudes of the above, i.e. exact outcome probabilities.
std::map<BasisLabel, Rational> xquery_probabilities(const Bits& x);
std::map<BasisLabel, Rational> grover_probabilities(const Bits& x);

// Optimal deterministic decision tree by minimax over all partial
// assignments in {0,1,?}^n. Exponential; intended for n <= 6.
int decision_tree_depth(const SymPartialFn& f);

// Newton forward differences of the value vector (Undefined read as 0).
// For a total function these are its V-basis coefficients.
std::vector<Rational> forward_differences(const SymPartialFn& f);

// Exact degree of a total symmetric function: index of the last nonzero
// forward difference (0 for the zero function).
int total_function_degree(const SymPartialFn& f);

// C(n,k) by the multiplicative formula; 0 outside 0 <= k <= n.
BigInt binomial_product(long n, long k);

// Determinant by permutation expansion. Intended for size <= 7.
BigInt leibniz_determinant(const std::vector<std::vector<BigInt>>& m);

// Uniform over {0,1,*}^{n+1}.
SymPartialFn random_function(int n, std::mt19937_64& rng);

// Every function in {0,1,*}^{n+1}, in base-3 order.
std::vector<SymPartialFn> all_functions(int n);

}  // namespace symquery::oracle

#endif  // SYMQUERY_TESTS_ORACLES_HPP_
