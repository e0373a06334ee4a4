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
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "symquery/symfun.hpp"

namespace symquery {
namespace {

SymPartialFn fn(std::string_view s) { return SymPartialFn::parse(s); }

TEST(SymfunParseTest, LiteralVector) {
  const auto f = fn("0***1***0");
  EXPECT_EQ(f.n(), 8);
  EXPECT_EQ(f, family_dj(8, 0));
  EXPECT_EQ(f.to_string(), "0***1***0");
}

TEST(SymfunParseTest, FamilyExpressions) {
  EXPECT_EQ(fn("DJ:8,1").to_string(), "00**1**00");
  EXPECT_EQ(fn("dj:4,0").to_string(), "0*1*0");
  EXPECT_EQ(fn("F1:5,3").to_string(), "0**1**");
  EXPECT_EQ(fn("F2:4,2").to_string(), "0*11*");
  EXPECT_EQ(fn("F3:5,3").to_string(), "0**1*0");
  EXPECT_EQ(fn("F4:5").to_string(), "0*11*0");
  EXPECT_EQ(fn("DW:4,1,3").to_string(), "*0*1*");
  EXPECT_EQ(fn("OR:3").to_string(), "0111");
  EXPECT_EQ(fn("AND:3").to_string(), "0001");
  EXPECT_EQ(fn("PARITY:3").to_string(), "0101");
  EXPECT_EQ(fn("MAJ:4").to_string(), "00011");
  EXPECT_EQ(fn("EXACT:4,2").to_string(), "00100");
  EXPECT_EQ(fn("THRESHOLD:4,3").to_string(), "00011");
}

TEST(SymfunParseTest, RejectsBadInput) {
  EXPECT_THROW(fn("XYZ"), std::invalid_argument);
  EXPECT_THROW(fn("0"), std::invalid_argument);
  EXPECT_THROW(fn("01a"), std::invalid_argument);
  EXPECT_THROW(fn("DJ:8"), std::invalid_argument);
  EXPECT_THROW(fn("DJ:4,2"), std::invalid_argument);
  EXPECT_THROW(fn("DJ:5,0"), std::invalid_argument);
  EXPECT_THROW(fn("FOO:3"), std::invalid_argument);
  EXPECT_THROW(fn("F1:4,x"), std::invalid_argument);
  EXPECT_THROW(fn("EXACT:4,5"), std::invalid_argument);
}

TEST(SymfunFamilyTest, ParameterRanges) {
  EXPECT_THROW(family_f1(4, 0), std::invalid_argument);
  EXPECT_THROW(family_f1(4, 5), std::invalid_argument);
  EXPECT_THROW(family_f2(4, 4), std::invalid_argument);
  EXPECT_THROW(family_f3(4, 4), std::invalid_argument);
  EXPECT_THROW(family_f4(1), std::invalid_argument);
  EXPECT_THROW(family_dw(4, 3, 3), std::invalid_argument);
  EXPECT_NO_THROW(family_dw(4, 0, 4));
}

TEST(SymfunFamilyTest, EvenF4CoincidesWithMiddleF3) {
  for (int n = 2; n <= 12; n += 2) EXPECT_EQ(family_f4(n), family_f3(n, n / 2)) << n;
}

TEST(SymfunFamilyTest, DjCaseSplit) {
  for (int n = 2; n <= 20; n += 2) {
    for (int k = 0; 2 * k < n; ++k) {
      const auto f = family_dj(n, k);
      for (int w = 0; w <= n; ++w) {
        FnValue want = FnValue::Undefined;
        if (w == n / 2) want = FnValue::One;
        if (w <= k || w >= n - k) want = FnValue::Zero;
        ASSERT_EQ(f.value_at_weight(w), want) << n << "," << k << "," << w;
      }
    }
  }
}

TEST(SymfunFamilyTest, NamedFamiliesAreTotal) {
  for (int n = 1; n <= 9; ++n) {
    for (auto fam : {NamedFamily::Or, NamedFamily::And, NamedFamily::Parity, NamedFamily::Majority}) {
      EXPECT_TRUE(family_named(fam, n).is_total());
    }
  }
}

TEST(SymfunTest, ValueAtWeight) {
  const auto f = family_dj(4, 0);
  EXPECT_EQ(f.value_at_weight(2), FnValue::One);
  EXPECT_EQ(f.value_at_weight(1), FnValue::Undefined);
  EXPECT_THROW(f.value_at_weight(5), std::out_of_range);
  EXPECT_THROW(f.value_at_weight(-1), std::out_of_range);
}

TEST(SymfunTest, DomainInputs) {
  const auto dj = domain_inputs(family_dj(4, 0));
  EXPECT_EQ(dj.size(), 8U);
  EXPECT_EQ(bits_to_string(dj.front()), "0000");
  EXPECT_EQ(bits_to_string(dj[1]), "0011");
  EXPECT_EQ(bits_to_string(dj.back()), "1111");
  EXPECT_TRUE(domain_inputs(fn("****")).empty());
}

TEST(SymfunTest, DomainInputsAreLexicographicAndPromised) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = oracle::random_function(1 + trial % 9, rng);
    const auto xs = domain_inputs(f);
    std::uint64_t expected = 0;
    for (int w : f.domain_weights()) expected += binomial(f.n(), w).get_ui();
    ASSERT_EQ(xs.size(), expected);
    ASSERT_EQ(domain_size(f), expected);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ASSERT_NE(f.value_at_weight(hamming_weight(xs[i])), FnValue::Undefined);
      if (i > 0) {
        ASSERT_LT(bits_to_string(xs[i - 1]), bits_to_string(xs[i]));
      }
    }
  }
}

TEST(SymfunTest, EnumerationCap) {
  std::vector<FnValue> v(kMaxEnumerationLength + 2, FnValue::Zero);
  EXPECT_THROW(domain_inputs(SymPartialFn(v)), std::invalid_argument);
}

TEST(SymfunTest, Bits) {
  EXPECT_EQ(parse_bits("0110"), (Bits{0, 1, 1, 0}));
  EXPECT_THROW(parse_bits("012"), std::invalid_argument);
  EXPECT_EQ(hamming_weight(parse_bits("10111")), 4);
}

TEST(IsomorphismTest, Orbit) {
  const auto iso = isomorphs(fn("01*"));
  EXPECT_EQ(iso[0].to_string(), "01*");
  EXPECT_EQ(iso[1].to_string(), "*10");
  EXPECT_EQ(iso[2].to_string(), "10*");
  EXPECT_EQ(iso[3].to_string(), "*01");

  const auto constant = isomorphs(fn("00"));
  EXPECT_EQ(constant[1].to_string(), "00");
  EXPECT_EQ(constant[2].to_string(), "11");
  EXPECT_EQ(constant[3].to_string(), "11");

  const auto palindrome = isomorphs(fn("0*1*0"));
  EXPECT_EQ(palindrome[0], palindrome[1]);
  EXPECT_EQ(palindrome[2], palindrome[3]);
}

TEST(IsomorphismTest, IsIsomorphic) {
  EXPECT_TRUE(is_isomorphic(fn("0*1"), fn("1*0")));
  EXPECT_FALSE(is_isomorphic(fn("01*"), fn("0*1")));
  EXPECT_TRUE(is_isomorphic(fn("01*"), fn("01*")));
  EXPECT_THROW(is_isomorphic(fn("01"), fn("011")), std::invalid_argument);
}

TEST(IsomorphismTest, KleinGroupLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = oracle::random_function(1 + trial % 10, rng);
    EXPECT_EQ(f.reversed().reversed(), f);
    EXPECT_EQ(f.complemented().complemented(), f);
    EXPECT_EQ(f.reversed().complemented(), f.complemented().reversed());
    const auto orbit = isomorphs(f);
    for (auto a : kAllIsomorphisms) {
      for (auto b : kAllIsomorphisms) {
        EXPECT_EQ(apply(a, apply(b, f)), apply(compose(a, b), f));
      }
      // The orbit is closed under both generators.
      const auto& g = apply(a, f);
      EXPECT_TRUE(is_isomorphic(f, g.reversed()));
      EXPECT_TRUE(is_isomorphic(f, g.complemented()));
      EXPECT_TRUE(is_isomorphic(g, f));
      const auto t = find_isomorphism(f, g);
      ASSERT_TRUE(t.has_value());
      EXPECT_EQ(apply(*t, f), g);
    }
  }
}

}  // namespace
}  // namespace symquery
