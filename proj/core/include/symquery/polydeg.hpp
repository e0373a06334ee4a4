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

#ifndef SYMQUERY_POLYDEG_HPP_
#define SYMQUERY_POLYDEG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "symquery/rational.hpp"
#include "symquery/symfun.hpp"

namespace symquery {

// A symmetric multilinear polynomial written in the V-basis,
//   q = c_0 + c_1 V_1 + ... + c_d V_d,
// where V_k is the k-th elementary symmetric polynomial. On an input of
// Hamming weight w, V_k evaluates to C(w, k).
class PolyV {
 public:
  // Throws std::invalid_argument on an empty coefficient list.
  explicit PolyV(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // sum_k c_k C(w, k); exact. Throws std::invalid_argument for w < 0.
  Rational eval(int w) const;

  std::string to_string() const;

  friend bool operator==(const PolyV&, const PolyV&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Rational eval_poly_at_weight(const PolyV& q, int w);

// 1 - q.
PolyV complement_poly(const PolyV& q);
// The polynomial w -> q(n - w), re-expanded in the V-basis (same degree).
PolyV reflect_poly(const PolyV& q, int n);

// True iff 0 <= q(w) <= 1 for every weight 0..n, q(w) <= eps where f is 0
// and q(w) >= 1 - eps where f is 1. Throws std::invalid_argument unless
// 0 <= eps < 1/2.
bool check_representation(const PolyV& q, const SymPartialFn& f, const Rational& eps);

struct FeasibilityResult {
  bool feasible = false;
  std::optional<PolyV> witness;
};

// Is there a degree-<=d V-basis polynomial approximating f with error eps?
// Solved exactly as an LP feasibility problem over c_0..c_d with one two-sided
// constraint per weight:
//   b_w = 0:  0       <= q(w) <= eps
//   b_w = 1:  1 - eps <= q(w) <= 1
//   b_w = *:  0       <= q(w) <= 1
// The classical reference formulation maximises Z subject to A c + e Z <= h,
// Z <= 0, and is feasible iff Z* = 0; a Phase-I simplex reaches the same
// verdict and yields the witness directly.
//
// Requires 0 <= eps < 1/2 and 0 <= d <= n (std::invalid_argument otherwise).
FeasibilityResult lp_feasible(const SymPartialFn& f, const Rational& eps, int d);

struct DegreeCertificate {
  int degree = 0;
  PolyV witness{std::vector<Rational>{Rational(0)}};
};

// Approximate degree by binary search over d in [0, n] (l = 0, r = n; move l
// up on infeasible probes and r down on feasible ones; answer l).
DegreeCertificate degree_certificate(const SymPartialFn& f, const Rational& eps);
int degree(const SymPartialFn& f, const Rational& eps);

// ceil(deg_0(f) / 2), the polynomial-method lower bound on exact quantum
// query complexity.
int qe_lower_bound(const SymPartialFn& f);

struct FamilyTag {
  enum class Kind { ConstantOrEmpty, Deg1F1nn, F1, F2, F3, F4 };
  Kind kind = Kind::ConstantOrEmpty;
  // k for F1/F2, l for F3; 0 otherwise.
  int param = 0;
  // apply(transform, f) equals the family vector.
  Isomorphism transform = Isomorphism::Identity;

  std::string to_string() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Classification of symmetric partial functions of exact degree at most 2,
// by exact vector match of f's isomorphs against the family list:
//   degree 0: constant or empty,
//   degree 1: f1(n, n),
//   degree 2: f1(n, k) and f2(n, k) with floor(n/2) <= k <= n-1,
//             f3(n, l) with floor(n/2) <= l <= ceil(n/2), and f4(n).
// f4 at even n coincides with f3(n, n/2) and is reported as F3.
// Returns nullopt when no family matches. Requires n > 1.
std::optional<FamilyTag> classify_deg2(const SymPartialFn& f);

}  // namespace symquery

#endif  // SYMQUERY_POLYDEG_HPP_
