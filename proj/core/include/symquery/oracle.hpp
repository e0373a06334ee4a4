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

#ifndef SYMQUERY_ORACLE_HPP_
#define SYMQUERY_ORACLE_HPP_

#include <cstdint>
#include <initializer_list>

#include "symquery/symfun.hpp"

namespace symquery {

// The classical input as seen by one stage of an algorithm. Derived oracles
// drop positions, append constant padding, or negate every bit; positions are
// always 1-based and contiguous in the derived view.
class Oracle {
 public:
  explicit Oracle(Bits bits) : bits_(std::move(bits)) {}

  int size() const { return static_cast<int>(bits_.size()); }
  const Bits& bits() const { return bits_; }

  // x_position. Throws std::out_of_range outside 1..size().
  std::uint8_t query(int position) const;

  // Appends `zeros` zero bits followed by `ones` one bits. Padded positions
  // answer queries with their constant.
  Oracle padded(int zeros, int ones = 0) const;
  Oracle complemented() const;
  // Removes the given 1-based positions; later positions shift down.
  Oracle without(std::initializer_list<int> positions) const;

 private:
  Bits bits_;
};

}  // namespace symquery

#endif  // SYMQUERY_ORACLE_HPP_
