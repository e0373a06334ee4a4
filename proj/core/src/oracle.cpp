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

#include "symquery/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symquery {

std::uint8_t Oracle::query(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("oracle position " + std::to_string(position) + " outside 1.." +
                            std::to_string(size()));
  }
  return bits_[static_cast<std::size_t>(position) - 1];
}

Oracle Oracle::padded(int zeros, int ones) const {
  if (zeros < 0 || ones < 0) throw std::invalid_argument("negative padding");
  Bits out = bits_;
  out.insert(out.end(), static_cast<std::size_t>(zeros), std::uint8_t{0});
  out.insert(out.end(), static_cast<std::size_t>(ones), std::uint8_t{1});
  return Oracle(std::move(out));
}

Oracle Oracle::complemented() const {
  Bits out = bits_;
  for (auto& b : out) b ^= 1U;
  return Oracle(std::move(out));
}

Oracle Oracle::without(std::initializer_list<int> positions) const {
  for (int p : positions) query(p);  // range check
  Bits out;
  out.reserve(bits_.size());
  for (int p = 1; p <= size(); ++p) {
    if (std::find(positions.begin(), positions.end(), p) == positions.end()) {
      out.push_back(bits_[static_cast<std::size_t>(p) - 1]);
    }
  }
  return Oracle(std::move(out));
}

}  // namespace symquery
