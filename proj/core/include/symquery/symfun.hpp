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

#ifndef SYMQUERY_SYMFUN_HPP_
#define SYMQUERY_SYMFUN_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symquery {

enum class FnValue : std::uint8_t { Zero, One, Undefined };

// '0', '1' or '*'.
char to_char(FnValue v);

// An input bitstring x_1..x_n, stored x_1 first. Entries are 0 or 1.
using Bits = std::vector<std::uint8_t>;

// Parses a string over {0,1}. Throws std::invalid_argument otherwise.
Bits parse_bits(std::string_view text);
std::string bits_to_string(std::span<const std::uint8_t> bits);
int hamming_weight(std::span<const std::uint8_t> bits);

// Largest n accepted by operations that enumerate {0,1}^n.
inline constexpr int kMaxEnumerationLength = 30;

// A symmetric partial Boolean function on n bits, stored as the value vector
// (b_0, ..., b_n) indexed by Hamming weight. Immutable once built.
class SymPartialFn {
 public:
  // Requires at least two entries (n >= 1).
  explicit SymPartialFn(std::vector<FnValue> values);

  // Literal vectors over {0,1,*} or family expressions such as "DJ:8,1".
  static SymPartialFn parse(std::string_view spec);

  int n() const { return static_cast<int>(values_.size()) - 1; }
  std::span<const FnValue> values() const { return values_; }
  // Throws std::out_of_range unless 0 <= w <= n.
  FnValue value_at_weight(int w) const;

  std::vector<int> domain_weights() const;
  bool is_total() const;

  // Input negation: b_w -> b_{n-w}.
  SymPartialFn reversed() const;
  // Output negation: Zero <-> One, Undefined fixed.
  SymPartialFn complemented() const;

  std::string to_string() const;

  friend bool operator==(const SymPartialFn&, const SymPartialFn&) = default;

 private:
  std::vector<FnValue> values_;
};

// Family constructors. All throw std::invalid_argument on out-of-range
// parameters.

// 1 at weight n/2, 0 at weights <= k or >= n-k. Needs n even, 0 <= k < n/2.
SymPartialFn family_dj(int n, int k);
// 0 at weight 0, 1 at weight k. 0 < k <= n.
SymPartialFn family_f1(int n, int k);
// 0 at weight 0, 1 at weights k and k+1. 0 < k < n.
SymPartialFn family_f2(int n, int k);
// 0 at weights 0 and n, 1 at weight l. 0 < l < n.
SymPartialFn family_f3(int n, int l);
// 0 at weights 0 and n, 1 at floor(n/2) and ceil(n/2). n > 1.
SymPartialFn family_f4(int n);
// 0 at weight k, 1 at weight l. 0 <= k < l <= n.
SymPartialFn family_dw(int n, int k, int l);

enum class NamedFamily { Or, And, Parity, Majority, Exact, Threshold };

// Total symmetric functions. `k` is read only by Exact and Threshold, which
// require 0 <= k <= n.
SymPartialFn family_named(NamedFamily family, int n, int k = 0);

// The four symmetries of the value vector. Applying a transform to f yields
// the isomorph transform(f).
enum class Isomorphism { Identity, Reverse, Complement, ReverseComplement };

std::string_view to_string(Isomorphism t);
SymPartialFn apply(Isomorphism t, const SymPartialFn& f);
// Composition: apply(compose(a, b), f) == apply(a, apply(b, f)).
Isomorphism compose(Isomorphism a, Isomorphism b);
inline constexpr std::array<Isomorphism, 4> kAllIsomorphisms = {
    Isomorphism::Identity, Isomorphism::Reverse, Isomorphism::Complement,
    Isomorphism::ReverseComplement};

// [f, reverse(f), complement(f), reverse(complement(f))].
std::array<SymPartialFn, 4> isomorphs(const SymPartialFn& f);

// The first transform t (in kAllIsomorphisms order) with apply(t, f) == g.
// Throws std::invalid_argument when the lengths differ.
std::optional<Isomorphism> find_isomorphism(const SymPartialFn& f, const SymPartialFn& g);
bool is_isomorphic(const SymPartialFn& f, const SymPartialFn& g);

// Number of promised inputs, sum over defined weights of C(n, w).
std::uint64_t domain_size(const SymPartialFn& f);

// Visits every x with a defined value, in lexicographic order of the string
// x_1 x_2 ... x_n. Throws std::invalid_argument if n > kMaxEnumerationLength.
void for_each_domain_input(const SymPartialFn& f,
                           const std::function<void(const Bits&)>& visit);
std::vector<Bits> domain_inputs(const SymPartialFn& f);

}  // namespace symquery

#endif  // SYMQUERY_SYMFUN_HPP_
