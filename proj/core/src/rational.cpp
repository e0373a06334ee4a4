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

#include "symquery/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace symquery {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  return Rational(parse_integer(num), parse_integer(den));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BinomialTable::BinomialTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("BinomialTable: negative size");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, BigInt(1));
    for (int k = 1; k < n; ++k) {
      const auto& prev = rows_[static_cast<std::size_t>(n) - 1];
      row[static_cast<std::size_t>(k)] =
          prev[static_cast<std::size_t>(k) - 1] + prev[static_cast<std::size_t>(k)];
    }
  }
}

const BinomialTable& BinomialTable::shared(int max_n) {
  thread_local BinomialTable table(64);
  if (table.max_n() < max_n) table = BinomialTable(std::max(max_n, 2 * table.max_n()));
  return table;
}

const BigInt& BinomialTable::operator()(long n, long k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n > max_n()) throw std::out_of_range("BinomialTable: row beyond table");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace symquery
