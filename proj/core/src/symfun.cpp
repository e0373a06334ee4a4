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

#include "symquery/symfun.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace symquery {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const std::string& msg) {
  if (!ok) bad(msg);
}

std::vector<FnValue> undefined_vector(int n) {
  require(n >= 1, "input length n must be positive");
  return std::vector<FnValue>(static_cast<std::size_t>(n) + 1, FnValue::Undefined);
}

std::vector<int> parse_int_list(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      bad("malformed parameter list in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string upper(std::string_view s) {
  std::string r(s);
  for (auto& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return r;
}

}  // namespace

char to_char(FnValue v) {
  switch (v) {
    case FnValue::Zero:
      return '0';
    case FnValue::One:
      return '1';
    case FnValue::Undefined:
      return '*';
  }
  return '?';
}

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') bad("bitstring must contain only 0 and 1: '" + std::string(text) + "'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

int hamming_weight(std::span<const std::uint8_t> bits) {
  return static_cast<int>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

SymPartialFn::SymPartialFn(std::vector<FnValue> values) : values_(std::move(values)) {
  require(values_.size() >= 2, "a symmetric function needs n >= 1 (at least 2 entries)");
}

SymPartialFn SymPartialFn::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    require(spec.size() >= 2, "function literal needs at least 2 entries: '" + std::string(spec) + "'");
    std::vector<FnValue> values;
    for (char c : spec) {
      switch (c) {
        case '0':
          values.push_back(FnValue::Zero);
          break;
        case '1':
          values.push_back(FnValue::One);
          break;
        case '*':
          values.push_back(FnValue::Undefined);
          break;
        default:
          bad("function literal must be over {0,1,*}: '" + std::string(spec) + "'");
      }
    }
    return SymPartialFn(std::move(values));
  }

  const std::string name = upper(spec.substr(0, colon));
  const std::vector<int> p = parse_int_list(spec.substr(colon + 1), spec);
  auto arity = [&](std::size_t want) {
    require(p.size() == want, name + " expects " + std::to_string(want) + " parameter(s)");
  };
  if (name == "DJ") {
    arity(2);
    return family_dj(p[0], p[1]);
  }
  if (name == "F1") {
    arity(2);
    return family_f1(p[0], p[1]);
  }
  if (name == "F2") {
    arity(2);
    return family_f2(p[0], p[1]);
  }
  if (name == "F3") {
    arity(2);
    return family_f3(p[0], p[1]);
  }
  if (name == "F4") {
    arity(1);
    return family_f4(p[0]);
  }
  if (name == "DW") {
    arity(3);
    return family_dw(p[0], p[1], p[2]);
  }
  if (name == "EXACT") {
    arity(2);
    return family_named(NamedFamily::Exact, p[0], p[1]);
  }
  if (name == "THRESHOLD") {
    arity(2);
    return family_named(NamedFamily::Threshold, p[0], p[1]);
  }
  if (name == "OR") {
    arity(1);
    return family_named(NamedFamily::Or, p[0]);
  }
  if (name == "AND") {
    arity(1);
    return family_named(NamedFamily::And, p[0]);
  }
  if (name == "PARITY") {
    arity(1);
    return family_named(NamedFamily::Parity, p[0]);
  }
  if (name == "MAJ") {
    arity(1);
    return family_named(NamedFamily::Majority, p[0]);
  }
  bad("unknown function family '" + name + "'");
}

FnValue SymPartialFn::value_at_weight(int w) const {
  if (w < 0 || w > n()) throw std::out_of_range("weight " + std::to_string(w) + " outside [0, n]");
  return values_[static_cast<std::size_t>(w)];
}

std::vector<int> SymPartialFn::domain_weights() const {
  std::vector<int> ws;
  for (int w = 0; w <= n(); ++w) {
    if (values_[static_cast<std::size_t>(w)] != FnValue::Undefined) ws.push_back(w);
  }
  return ws;
}

bool SymPartialFn::is_total() const {
  return std::none_of(values_.begin(), values_.end(),
                      [](FnValue v) { return v == FnValue::Undefined; });
}

SymPartialFn SymPartialFn::reversed() const {
  return SymPartialFn(std::vector<FnValue>(values_.rbegin(), values_.rend()));
}

SymPartialFn SymPartialFn::complemented() const {
  std::vector<FnValue> out = values_;
  for (auto& v : out) {
    if (v == FnValue::Zero) {
      v = FnValue::One;
    } else if (v == FnValue::One) {
      v = FnValue::Zero;
    }
  }
  return SymPartialFn(std::move(out));
}

std::string SymPartialFn::to_string() const {
  std::string s;
  for (auto v : values_) s.push_back(to_char(v));
  return s;
}

SymPartialFn family_dj(int n, int k) {
  require(n >= 2 && n % 2 == 0, "DJ needs an even n >= 2");
  require(k >= 0 && 2 * k < n, "DJ needs 0 <= k < n/2");
  auto v = undefined_vector(n);
  for (int w = 0; w <= n; ++w) {
    if (w <= k || w >= n - k) v[static_cast<std::size_t>(w)] = FnValue::Zero;
  }
  v[static_cast<std::size_t>(n / 2)] = FnValue::One;
  return SymPartialFn(std::move(v));
}

SymPartialFn family_f1(int n, int k) {
  require(n >= 1 && k > 0 && k <= n, "F1 needs 0 < k <= n");
  auto v = undefined_vector(n);
  v[0] = FnValue::Zero;
  v[static_cast<std::size_t>(k)] = FnValue::One;
  return SymPartialFn(std::move(v));
}

SymPartialFn family_f2(int n, int k) {
  require(n >= 2 && k > 0 && k < n, "F2 needs 0 < k < n");
  auto v = undefined_vector(n);
  v[0] = FnValue::Zero;
  v[static_cast<std::size_t>(k)] = FnValue::One;
  v[static_cast<std::size_t>(k) + 1] = FnValue::One;
  return SymPartialFn(std::move(v));
}

SymPartialFn family_f3(int n, int l) {
  require(n >= 2 && l > 0 && l < n, "F3 needs 0 < l < n");
  auto v = undefined_vector(n);
  v[0] = FnValue::Zero;
  v[static_cast<std::size_t>(n)] = FnValue::Zero;
  v[static_cast<std::size_t>(l)] = FnValue::One;
  return SymPartialFn(std::move(v));
}

SymPartialFn family_f4(int n) {
  require(n > 1, "F4 needs n > 1");
  auto v = undefined_vector(n);
  v[0] = FnValue::Zero;
  v[static_cast<std::size_t>(n)] = FnValue::Zero;
  v[static_cast<std::size_t>(n / 2)] = FnValue::One;
  v[static_cast<std::size_t>((n + 1) / 2)] = FnValue::One;
  return SymPartialFn(std::move(v));
}

SymPartialFn family_dw(int n, int k, int l) {
  require(n >= 1 && k >= 0 && k < l && l <= n, "DW needs 0 <= k < l <= n");
  auto v = undefined_vector(n);
  v[static_cast<std::size_t>(k)] = FnValue::Zero;
  v[static_cast<std::size_t>(l)] = FnValue::One;
  return SymPartialFn(std::move(v));
}

SymPartialFn family_named(NamedFamily family, int n, int k) {
  auto v = undefined_vector(n);
  if (family == NamedFamily::Exact || family == NamedFamily::Threshold) {
    require(k >= 0 && k <= n, "EXACT/THRESHOLD need 0 <= k <= n");
  }
  for (int w = 0; w <= n; ++w) {
    bool one = false;
    switch (family) {
      case NamedFamily::Or:
        one = w >= 1;
        break;
      case NamedFamily::And:
        one = w == n;
        break;
      case NamedFamily::Parity:
        one = w % 2 == 1;
        break;
      case NamedFamily::Majority:
        one = 2 * w > n;
        break;
      case NamedFamily::Exact:
        one = w == k;
        break;
      case NamedFamily::Threshold:
        one = w >= k;
        break;
    }
    v[static_cast<std::size_t>(w)] = one ? FnValue::One : FnValue::Zero;
  }
  return SymPartialFn(std::move(v));
}

std::string_view to_string(Isomorphism t) {
  switch (t) {
    case Isomorphism::Identity:
      return "identity";
    case Isomorphism::Reverse:
      return "reverse";
    case Isomorphism::Complement:
      return "complement";
    case Isomorphism::ReverseComplement:
      return "reverse-complement";
  }
  return "?";
}

SymPartialFn apply(Isomorphism t, const SymPartialFn& f) {
  switch (t) {
    case Isomorphism::Identity:
      return f;
    case Isomorphism::Reverse:
      return f.reversed();
    case Isomorphism::Complement:
      return f.complemented();
    case Isomorphism::ReverseComplement:
      return f.complemented().reversed();
  }
  return f;
}

Isomorphism compose(Isomorphism a, Isomorphism b) {
  // Klein four-group: encode as (reverse, complement) bit pairs under XOR.
  auto bits = [](Isomorphism t) {
    switch (t) {
      case Isomorphism::Identity:
        return 0;
      case Isomorphism::Reverse:
        return 1;
      case Isomorphism::Complement:
        return 2;
      case Isomorphism::ReverseComplement:
        return 3;
    }
    return 0;
  };
  static constexpr std::array<Isomorphism, 4> kByBits = {
      Isomorphism::Identity, Isomorphism::Reverse, Isomorphism::Complement,
      Isomorphism::ReverseComplement};
  return kByBits[static_cast<std::size_t>(bits(a) ^ bits(b))];
}

std::array<SymPartialFn, 4> isomorphs(const SymPartialFn& f) {
  return {f, f.reversed(), f.complemented(), f.complemented().reversed()};
}

std::optional<Isomorphism> find_isomorphism(const SymPartialFn& f, const SymPartialFn& g) {
  require(f.n() == g.n(), "isomorphism test needs functions of equal length");
  for (auto t : kAllIsomorphisms) {
    if (apply(t, f) == g) return t;
  }
  return std::nullopt;
}

bool is_isomorphic(const SymPartialFn& f, const SymPartialFn& g) {
  return find_isomorphism(f, g).has_value();
}

std::uint64_t domain_size(const SymPartialFn& f) {
  std::uint64_t total = 0;
  for (int w : f.domain_weights()) {
    std::uint64_t c = 1;  // C(n, w), exact in 64 bits for n <= 62.
    for (int i = 1; i <= w; ++i) c = c * static_cast<std::uint64_t>(f.n() - w + i) / static_cast<std::uint64_t>(i);
    total += c;
  }
  return total;
}

void for_each_domain_input(const SymPartialFn& f,
                           const std::function<void(const Bits&)>& visit) {
  const int n = f.n();
  require(n <= kMaxEnumerationLength,
          "input enumeration is capped at n = " + std::to_string(kMaxEnumerationLength));
  const auto values = f.values();
  Bits x(static_cast<std::size_t>(n));
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < count; ++v) {
    const int w = std::popcount(v);
    if (values[static_cast<std::size_t>(w)] == FnValue::Undefined) continue;
    // x_1 is the most significant bit so that integer order is lexicographic.
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1U);
    visit(x);
  }
}

std::vector<Bits> domain_inputs(const SymPartialFn& f) {
  std::vector<Bits> out;
  for_each_domain_input(f, [&](const Bits& x) { out.push_back(x); });
  return out;
}

}  // namespace symquery
