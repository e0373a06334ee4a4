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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "symquery/simplex.hpp"

namespace symquery {
namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool satisfies(const std::vector<BoundedRow>& rows, const std::vector<Rational>& x) {
  for (const auto& r : rows) {
    const Rational v = dot(r.coeffs, x);
    if (v < r.lower || v > r.upper) return false;
  }
  return true;
}

TEST(SimplexTest, SingleEquality) {
  const std::vector<BoundedRow> rows{{{Rational(2)}, Rational(1), Rational(1)}};
  const auto x = find_feasible_point(rows, 1);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1, 2));
}

TEST(SimplexTest, NegativeSolutionsAreReachable) {
  // x0 + x1 = -3, x0 - x1 = 1  ->  x0 = -1, x1 = -2
  const std::vector<BoundedRow> rows{
      {{Rational(1), Rational(1)}, Rational(-3), Rational(-3)},
      {{Rational(1), Rational(-1)}, Rational(1), Rational(1)},
  };
  const auto x = find_feasible_point(rows, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(-1));
  EXPECT_EQ((*x)[1], Rational(-2));
}

TEST(SimplexTest, DetectsInfeasibility) {
  // x in [0,1] and 2x in [3,4].
  const std::vector<BoundedRow> rows{
      {{Rational(1)}, Rational(0), Rational(1)},
      {{Rational(2)}, Rational(3), Rational(4)},
  };
  EXPECT_FALSE(find_feasible_point(rows, 1).has_value());
}

TEST(SimplexTest, EmptyIntervalIsInfeasible) {
  const std::vector<BoundedRow> rows{{{Rational(1)}, Rational(1), Rational(0)}};
  EXPECT_FALSE(find_feasible_point(rows, 1).has_value());
}

TEST(SimplexTest, RowWidthMismatchThrows) {
  const std::vector<BoundedRow> rows{{{Rational(1)}, Rational(0), Rational(1)}};
  EXPECT_THROW(find_feasible_point(rows, 2), std::invalid_argument);
}

TEST(SimplexTest, NoRowsGivesOrigin) {
  const auto x = find_feasible_point({}, 3);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->size(), 3U);
}

TEST(SimplexTest, DegenerateSystemTerminates) {
  // Many redundant rows through the same vertex.
  std::vector<BoundedRow> rows;
  for (int i = 1; i <= 12; ++i) {
    rows.push_back({{Rational(i), Rational(-i)}, Rational(0), Rational(i)});
    rows.push_back({{Rational(1), Rational(i)}, Rational(0), Rational(0)});
  }
  const auto x = find_feasible_point(rows, 2);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(satisfies(rows, *x));
}

// Systems built around a known point are feasible, and the returned point
// satisfies every row.
TEST(SimplexTest, RandomFeasibleSystems) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> slack(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t vars = 1 + trial % 4;
    std::vector<Rational> point;
    for (std::size_t j = 0; j < vars; ++j) point.emplace_back(BigInt(coef(rng)), BigInt(1 + slack(rng)));
    std::vector<BoundedRow> rows;
    for (int r = 0; r < 6; ++r) {
      BoundedRow row;
      for (std::size_t j = 0; j < vars; ++j) row.coeffs.emplace_back(coef(rng));
      const Rational v = dot(row.coeffs, point);
      row.lower = v - Rational(slack(rng));
      row.upper = v + Rational(slack(rng));
      rows.push_back(std::move(row));
    }
    const auto x = find_feasible_point(rows, vars);
    ASSERT_TRUE(x.has_value()) << "trial " << trial;
    ASSERT_TRUE(satisfies(rows, *x)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace symquery
