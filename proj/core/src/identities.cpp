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

#include "symquery/identities.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace symquery {
namespace {

BigInt binom_or_zero(long p, long l) {
  if (l < 0 || p < l || p < 0) return 0;
  return binomial(p, l);
}

void check_range(int n, int k) {
  if (k < 0 || n < 2 * k + 1) {
    throw std::invalid_argument("binomial determinant needs k >= 0 and n >= 2k+1, got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k));
  }
}

}  // namespace

bool helper_identity(long p, long l) {
  return BigInt(p + 1) * binom_or_zero(p, l) == BigInt(l + 1) * binom_or_zero(p + 1, l + 1);
}

std::vector<std::vector<BigInt>> binom_matrix(int n, int k) {
  check_range(n, k);
  std::vector<std::vector<BigInt>> m(k + 1, std::vector<BigInt>(k + 1));
  for (int r = 0; r <= k; ++r) {
    for (int c = 0; c <= k; ++c) m[r][c] = binom_or_zero(n - r, k + 1 + c);
  }
  return m;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t size = m.size();
  for (const auto& row : m) {
    if (row.size() != size) throw std::invalid_argument("matrix is not square");
  }
  if (size == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t p = 0; p + 1 < size; ++p) {
    if (m[p][p] == 0) {
      std::size_t swap_with = p + 1;
      while (swap_with < size && m[swap_with][p] == 0) ++swap_with;
      if (swap_with == size) return 0;
      std::swap(m[p], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < size; ++i) {
      for (std::size_t j = p + 1; j < size; ++j) {
        BigInt v = m[i][j] * m[p][p] - m[i][p] * m[p][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = m[p][p];
  }
  return sign * m[size - 1][size - 1];
}

Rational binom_det(int n, int k) { return Rational(bareiss_determinant(binom_matrix(n, k))); }

Rational binom_det_closed(int n, int k) {
  check_range(n, k);
  BigInt num = 1;
  for (int i = k + 1; i <= 2 * k + 1; ++i) num *= binomial(n, i);
  BigInt den = 1;
  for (int i = 1; i <= k; ++i) den *= binomial(n, i);
  if ((k * (k + 5) / 2) % 2 != 0) num = -num;
  return Rational(num, den);
}

bool check_identity(int n, int k) { return binom_det(n, k) == binom_det_closed(n, k); }

}  // namespace symquery
