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

// Exact quantum query algorithms for symmetric promise problems, simulated
// with full enumeration of intermediate measurement branches.
//
// Every quantum subroutine here makes exactly one oracle call and then
// measures:
//
//  * Xquery on m bits certifies either |x| != m/2 (outcome (0,0)) or
//    exhibits a pair (i,j), i < j, with x_i != x_j. Basis: (0,0), (i,0) for
//    1 <= i <= m, and (i,j) for 1 <= i < j <= m.
//  * Grover-1 on n bits applies G = -W Z_1 W^dagger Z_x to the uniform
//    superposition W|1> and measures the index register, labelled (i,1).
//
// Query accounting: each quantum subroutine costs 1; each classical read of
// an input position costs 1, including reads of padded positions.

#ifndef SYMQUERY_ALGOS_HPP_
#define SYMQUERY_ALGOS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symquery/qsim.hpp"
#include "symquery/symfun.hpp"

namespace symquery {

// Raised when no two-query padding reduction applies to DW_n^{k,l}.
class Unsupported : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class AlgorithmId { Xquery, Dj, Dhw, F1, F3, Grover1, Dw1, Dw2, Dw, F2, F4 };

std::string_view to_string(AlgorithmId id);
// Accepts the CLI identifiers: xquery, dj, dhw, f1, f3, grover1, dw1, dw2,
// dw, f2, f4.
std::optional<AlgorithmId> parse_algorithm_id(std::string_view name);

// An algorithm with its parameters. `n` is the input length (m for Xquery).
// `transform` wraps the algorithm as in the isomorphism argument: Reverse
// negates every input bit before it reaches the algorithm and Complement
// negates the output, so the wrapped algorithm computes
// apply(transform, promise_function(base)).
struct AlgorithmSpec {
  AlgorithmId id = AlgorithmId::Dj;
  int n = 0;
  int k = 0;
  int l = 0;
  Isomorphism transform = Isomorphism::Identity;

  std::string to_string() const;
};

// Throws std::invalid_argument (Unsupported for dw) when parameters are out
// of range.
void validate(const AlgorithmSpec& spec);

// The partial function the algorithm computes exactly. For Xquery this is
// the map (0,0) -> 0, (i,j) -> 1 restricted to the weights where it is
// deterministic. Grover-1 returns an index and has no Boolean promise
// function (throws std::invalid_argument).
SymPartialFn promise_function(const AlgorithmSpec& spec);

// Worst-case query count the algorithm is designed for.
int query_budget(const AlgorithmSpec& spec);

struct BranchTrace {
  std::vector<BasisLabel> path;  // measured outcomes, in order
  double probability = 0.0;
  // 0/1 for decision algorithms; the measured index i for Grover-1.
  int output = 0;
  int queries_used = 0;
};

struct AlgorithmRun {
  Bits input;
  std::vector<BranchTrace> branches;

  double total_probability() const;
  int max_queries() const;
};

// Runs on any input of the right length. Inputs outside the promise are
// allowed; their outputs carry no guarantee.
AlgorithmRun run_algorithm(const AlgorithmSpec& spec, const Bits& x);

AlgorithmRun xquery(const Bits& x);
AlgorithmRun dj(int n, int k, const Bits& x);
AlgorithmRun dhw(int n, int k, const Bits& x);
AlgorithmRun f1(int n, const Bits& x);
AlgorithmRun f3(int n, const Bits& x);
AlgorithmRun grover1(const Bits& x);
AlgorithmRun dw1(int n, const Bits& x);
AlgorithmRun dw2(int n, const Bits& x);
AlgorithmRun dw_general(int n, int k, int l, const Bits& x);
AlgorithmRun f2(int n, int k, const Bits& x);
AlgorithmRun f4(int n, const Bits& x);

// Pre-measurement states of the two quantum subroutines, for inspection.
QState xquery_final_state(const Bits& x);
QState grover_final_state(const Bits& x);

// Outcome distributions of the subroutines (one oracle call each).
OutcomeDistribution xquery_distribution(const Bits& x);
OutcomeDistribution grover_distribution(const Bits& x);

struct VerificationFailure {
  Bits input;
  BranchTrace branch;
};

struct VerificationReport {
  std::string algorithm;
  std::string function;
  std::uint64_t inputs_checked = 0;
  std::uint64_t branches_checked = 0;
  std::uint64_t failing_inputs = 0;
  bool all_exact = false;
  int worst_case_queries = 0;
  // max over inputs of |sum of branch probabilities - 1|
  double max_probability_error = 0.0;
  // Failing branches, capped at kMaxReportedFailures entries.
  std::vector<VerificationFailure> failures;
};

inline constexpr std::size_t kMaxReportedFailures = 16;

// Runs the algorithm on every promised input of f and every measurement
// branch of each run, and checks that each branch outputs f(x). Throws
// std::invalid_argument on a domain mismatch: f must have the algorithm's
// input length and define values only on weights in the algorithm's promise.
//
// Subtrees are summarised and memoised on the bits visible to each stage, so
// branch counts in the millions are covered without materialising traces.
VerificationReport verify_exact(const AlgorithmSpec& spec, const SymPartialFn& f);

// Checks the subroutine contracts on every relevant input:
//  * Xquery(m): all 2^m inputs; (0,0) only when |x| != m/2, (i,j) only
//    when x_i != x_j.
//  * Grover-1(n), n divisible by 4: inputs of weight n/4 (every outcome i
//    has x_i = 1) and 3n/4 (every outcome has x_i = 0).
// Throws std::invalid_argument for other algorithms.
VerificationReport verify_contract(const AlgorithmSpec& spec);

}  // namespace symquery

#endif  // SYMQUERY_ALGOS_HPP_
