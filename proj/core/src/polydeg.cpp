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

#include "symquery/polydeg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "symquery/simplex.hpp"

namespace symquery {
namespace {

void require_eps(const Rational& eps) {
  if (eps.sign() < 0 || eps >= Rational(1, 2)) {
    throw std::invalid_argument("eps must satisfy 0 <= eps < 1/2, got " + eps.to_string());
  }
}

// Target interval for q(w) given b_w.
std::pair<Rational, Rational> bounds_for(FnValue v, const Rational& eps) {
  switch (v) {
    case FnValue::Zero:
      return {Rational(0), eps};
    case FnValue::One:
      return {Rational(1) - eps, Rational(1)};
    case FnValue::Undefined:
      break;
  }
  return {Rational(0), Rational(1)};
}

}  // namespace

PolyV::PolyV(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PolyV needs at least c_0");
}

Rational PolyV::eval(int w) const {
  if (w < 0) throw std::invalid_argument("PolyV evaluated at a negative weight");
  const auto& binom = BinomialTable::shared(w);
  Rational sum = 0;
  const int top = std::min(w, degree());
  for (int k = 0; k <= top; ++k) {
    if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
    sum += coeffs_[static_cast<std::size_t>(k)] * Rational(binom(w, k));
  }
  return sum;
}

std::string PolyV::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) s += ", ";
    s += coeffs_[k].to_string();
  }
  return s + ")";
}

Rational eval_poly_at_weight(const PolyV& q, int w) { return q.eval(w); }

PolyV complement_poly(const PolyV& q) {
  std::vector<Rational> c = q.coeffs();
  for (auto& v : c) v = -v;
  c[0] += 1;
  return PolyV(std::move(c));
}

PolyV reflect_poly(const PolyV& q, int n) {
  // The coefficient of V_k in the binomial basis is the k-th forward
  // difference at 0 of the value sequence g(w) = q(n - w).
  const int d = q.degree();
  std::vector<Rational> diff(static_cast<std::size_t>(d) + 1);
  for (int w = 0; w <= d; ++w) {
    // q is a polynomial in w, so evaluating past [0, n] is still meaningful;
    // extend by the same binomial formula with generalised C(m, k).
    const int m = n - w;
    Rational value = 0;
    Rational binom = 1;  // C(m, k) for possibly negative m
    for (int k = 0; k <= d; ++k) {
      if (k > 0) binom = binom * Rational(m - k + 1) / Rational(k);
      value += q.coeffs()[static_cast<std::size_t>(k)] * binom;
    }
    diff[static_cast<std::size_t>(w)] = value;
  }
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    out[static_cast<std::size_t>(k)] = diff[0];
    for (int i = 0; i + 1 < static_cast<int>(diff.size()) - k; ++i) {
      diff[static_cast<std::size_t>(i)] =
          diff[static_cast<std::size_t>(i) + 1] - diff[static_cast<std::size_t>(i)];
    }
  }
  return PolyV(std::move(out));
}

bool check_representation(const PolyV& q, const SymPartialFn& f, const Rational& eps) {
  require_eps(eps);
  for (int w = 0; w <= f.n(); ++w) {
    const auto [lo, hi] = bounds_for(f.value_at_weight(w), eps);
    const Rational v = q.eval(w);
    if (v < lo || v > hi) return false;
  }
  return true;
}

FeasibilityResult lp_feasible(const SymPartialFn& f, const Rational& eps, int d) {
  require_eps(eps);
  if (d < 0 || d > f.n()) {
    throw std::invalid_argument("degree bound d must satisfy 0 <= d <= n");
  }
  const auto& binom = BinomialTable::shared(f.n());
  std::vector<BoundedRow> rows;
  rows.reserve(static_cast<std::size_t>(f.n()) + 1);
  for (int w = 0; w <= f.n(); ++w) {
    BoundedRow row;
    row.coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) row.coeffs.emplace_back(binom(w, k));
    std::tie(row.lower, row.upper) = bounds_for(f.value_at_weight(w), eps);
    rows.push_back(std::move(row));
  }
  auto point = find_feasible_point(rows, static_cast<std::size_t>(d) + 1);
  if (!point) return {};
  return {true, PolyV(std::move(*point))};
}

DegreeCertificate degree_certificate(const SymPartialFn& f, const Rational& eps) {
  require_eps(eps);
  int lo = 0;
  int hi = f.n();
  DegreeCertificate cert;
  while (lo <= hi) {
    const int d = (lo + hi) / 2;
    auto probe = lp_feasible(f, eps, d);
    if (!probe.feasible) {
      lo = d + 1;
    } else {
      hi = d - 1;
      cert.witness = std::move(*probe.witness);
    }
  }
  cert.degree = lo;
  return cert;
}

int degree(const SymPartialFn& f, const Rational& eps) { return degree_certificate(f, eps).degree; }

int qe_lower_bound(const SymPartialFn& f) { return (degree(f, Rational(0)) + 1) / 2; }

std::string FamilyTag::to_string() const {
  std::string name;
  switch (kind) {
    case Kind::ConstantOrEmpty:
      name = "constant";
      break;
    case Kind::Deg1F1nn:
      name = "F1(n,n)";
      break;
    case Kind::F1:
      name = "F1(k=" + std::to_string(param) + ")";
      break;
    case Kind::F2:
      name = "F2(k=" + std::to_string(param) + ")";
      break;
    case Kind::F3:
      name = "F3(l=" + std::to_string(param) + ")";
      break;
    case Kind::F4:
      name = "F4";
      break;
  }
  return name + " via " + std::string(symquery::to_string(transform));
}

std::optional<FamilyTag> classify_deg2(const SymPartialFn& f) {
  const int n = f.n();
  if (n <= 1) throw std::invalid_argument("classify_deg2 needs n > 1");

  bool seen_zero = false;
  bool seen_one = false;
  for (auto v : f.values()) {
    seen_zero |= v == FnValue::Zero;
    seen_one |= v == FnValue::One;
  }
  if (!(seen_zero && seen_one)) return FamilyTag{};

  using Kind = FamilyTag::Kind;
  std::vector<std::pair<FamilyTag, SymPartialFn>> candidates;
  candidates.push_back({{Kind::Deg1F1nn, n, Isomorphism::Identity}, family_f1(n, n)});
  for (int k = n / 2; k <= n - 1; ++k) {
    candidates.push_back({{Kind::F1, k, Isomorphism::Identity}, family_f1(n, k)});
  }
  for (int k = n / 2; k <= n - 1; ++k) {
    candidates.push_back({{Kind::F2, k, Isomorphism::Identity}, family_f2(n, k)});
  }
  for (int l = n / 2; l <= (n + 1) / 2; ++l) {
    candidates.push_back({{Kind::F3, l, Isomorphism::Identity}, family_f3(n, l)});
  }
  if (n % 2 == 1) candidates.push_back({{Kind::F4, 0, Isomorphism::Identity}, family_f4(n)});

  for (auto& [tag, family] : candidates) {
    if (auto t = find_isomorphism(f, family)) {
      tag.transform = *t;
      return tag;
    }
  }
  return std::nullopt;
}

}  // namespace symquery
