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

#ifndef SYMQUERY_RATIONAL_HPP_
#define SYMQUERY_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace symquery {

using BigInt = mpz_class;

// Exact rational number backed by GMP. Always kept in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  // Throws std::invalid_argument when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "p/q" and "-p/q" with decimal digits.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return value_.get_d(); }

  // "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Pascal's triangle in arbitrary precision, rows 0..max_n.
// Lookups outside the triangle (k < 0, k > n, n < 0) return 0.
class BinomialTable {
 public:
  explicit BinomialTable(int max_n);

  // A per-thread table covering at least rows 0..max_n, grown on demand.
  static const BinomialTable& shared(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  // Throws std::out_of_range if n > max_n().
  const BigInt& operator()(long n, long k) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

// C(n, k) with the same zero convention as BinomialTable.
BigInt binomial(long n, long k);

}  // namespace symquery

#endif  // SYMQUERY_RATIONAL_HPP_
