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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symquery/algos.hpp"
#include "symquery/classical.hpp"
#include "symquery/identities.hpp"
#include "symquery/polydeg.hpp"

namespace sq = symquery;
using sq::Rational;

namespace {

constexpr double kTol = 1e-9;

// First failure wins; later checks are skipped cheaply.
class Check {
 public:
  bool ok() const { return problem_.empty(); }
  const std::string& problem() const { return problem_; }

  void expect(bool cond, const std::function<std::string()>& describe) {
    if (ok() && !cond) problem_ = describe();
  }

 private:
  std::string problem_;
};

template <class... Args>
std::string str(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

sq::PolyV poly(std::vector<Rational> c) { return sq::PolyV(std::move(c)); }

sq::Bits bits_of(std::uint32_t v, int n) {
  sq::Bits x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (v >> i) & 1U;
  return x;
}

void criterion_dj(Check& c) {
  for (int n = 4; n <= 12; n += 2) {
    for (int k = 0; 2 * k < n; ++k) {
      const auto f = sq::family_dj(n, k);
      const auto r = sq::verify_exact({sq::AlgorithmId::Dj, n, k}, f);
      c.expect(r.all_exact, [&] { return str("dj n=", n, " k=", k, " not exact"); });
      c.expect(r.worst_case_queries == k + 1,
               [&] { return str("dj n=", n, " k=", k, " used ", r.worst_case_queries, " queries"); });
      c.expect(r.max_probability_error < kTol, [&] { return str("dj n=", n, " k=", k, " probability drift"); });
      const int d = sq::degree(f, Rational(0));
      c.expect(d == 2 * k + 2, [&] { return str("degree(DJ ", n, ",", k, ") = ", d); });
      c.expect(sq::qe_lower_bound(f) == k + 1, [&] { return str("lower bound mismatch at ", n, ",", k); });
      const int dc = sq::d_complexity(f);
      c.expect(dc == n / 2 + k + 1, [&] { return str("D(DJ ", n, ",", k, ") = ", dc); });
    }
  }
}

void criterion_example_one(Check& c) {
  for (int n = 2; n <= 16; n += 2) {
    const auto f = sq::family_dj(n, 0);
    c.expect(!sq::lp_feasible(f, Rational(0), 1).feasible, [&] { return str("degree 1 feasible at n=", n); });
    const auto r = sq::lp_feasible(f, Rational(0), 2);
    c.expect(r.feasible && sq::check_representation(*r.witness, f, Rational(0)),
             [&] { return str("degree 2 infeasible at n=", n); });
    const auto q = poly({0, Rational(4 * (n - 1), n * n), Rational(-8, n * n)});
    c.expect(sq::check_representation(q, f, Rational(0)), [&] { return str("explicit witness fails at n=", n); });
  }
}

void criterion_degree_two_witnesses(Check& c) {
  for (int n = 2; n <= 15; ++n) {
    for (int k = std::max(1, n / 2); k <= n - 1; ++k) {
      const auto q = poly({0, Rational(2, k + 1), Rational(-2, k * (k + 1))});
      c.expect(sq::check_representation(q, sq::family_f2(n, k), Rational(0)),
               [&] { return str("f2 witness fails at n=", n, " k=", k); });
    }
    if (n % 2 == 1 && n >= 3) {
      const auto q3 = poly({0, Rational(4, n + 1), Rational(-8, (n - 1) * (n + 1))});
      for (int l : {n / 2, (n + 1) / 2}) {
        c.expect(sq::check_representation(q3, sq::family_f3(n, l), Rational(0)),
                 [&] { return str("f3 witness fails at n=", n, " l=", l); });
      }
      const int m = n / 2;
      const auto q4 = poly({0, Rational(2, m + 1), Rational(-2, m * (m + 1))});
      c.expect(sq::check_representation(q4, sq::family_f4(n), Rational(0)),
               [&] { return str("f4 witness fails at n=", n); });
    }
  }
}

void criterion_classification(Check& c) {
  using Kind = sq::FamilyTag::Kind;
  for (int n = 4; n <= 6; ++n) {
    for (const auto& f : sq::oracle::all_functions(n)) {
      const int d = sq::degree(f, Rational(0));
      const auto tag = sq::classify_deg2(f);
      c.expect((d <= 2) == tag.has_value(),
               [&] { return str(f.to_string(), ": degree ", d, " but classified=", tag.has_value()); });
      if (!tag) continue;
      c.expect((d == 0) == (tag->kind == Kind::ConstantOrEmpty),
               [&] { return str(f.to_string(), ": degree ", d, " vs tag ", tag->to_string()); });
      c.expect((d == 1) == (tag->kind == Kind::Deg1F1nn),
               [&] { return str(f.to_string(), ": degree ", d, " vs tag ", tag->to_string()); });
    }
  }
}

void expect_exact(Check& c, const sq::AlgorithmSpec& spec, int max_queries, bool exactly) {
  const auto r = sq::verify_exact(spec, sq::promise_function(spec));
  c.expect(r.all_exact, [&] { return spec.to_string() + " not exact"; });
  c.expect(exactly ? r.worst_case_queries == max_queries : r.worst_case_queries <= max_queries,
           [&] { return str(spec.to_string(), " used ", r.worst_case_queries, " queries"); });
  c.expect(r.max_probability_error < kTol, [&] { return spec.to_string() + " probability drift"; });
}

// (n,k,l) with the padded two-query reduction available and l - k <= 8.
std::vector<sq::AlgorithmSpec> padded_dw_specs() {
  std::vector<sq::AlgorithmSpec> out;
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1; 3 * k < n; ++k) {
      for (int l = k + 2; l <= std::min(n, k + 8); l += 2) {
        if (3 * l < 2 * n + k || l < 3 * k) continue;
        out.push_back({sq::AlgorithmId::Dw, n, k, l});
      }
    }
  }
  return out;
}

void criterion_algorithms(Check& c) {
  using Id = sq::AlgorithmId;
  for (int n : {3, 5, 7, 9}) {
    expect_exact(c, {Id::F1, n}, 2, true);
    expect_exact(c, {Id::F3, n}, 2, true);
  }
  for (int n : {4, 8, 12}) {
    expect_exact(c, {Id::Dw1, n}, 2, true);
    expect_exact(c, {Id::Dw2, n}, 2, true);
  }
  const auto dws = padded_dw_specs();
  c.expect(!dws.empty(), [] { return std::string("no valid dw parameters enumerated"); });
  for (const auto& spec : dws) expect_exact(c, spec, 2, true);
  for (int n : {8, 12}) {
    for (int k = n / 4; k <= 5; ++k) expect_exact(c, {Id::F2, n, k}, 4, false);
  }
  for (int n : {5, 7, 9}) expect_exact(c, {Id::F4, n}, 5, false);
}

void criterion_optimality(Check& c) {
  // Cost side first, so a degree-bound failure does not hide it.
  std::string f1_degrees;
  bool f1_degree_ok = true;
  for (int m = 1; m <= 5; ++m) {
    const auto f1 = sq::family_f1(2 * m + 1, m);
    const auto dw = sq::family_dw(4 * m, m, 3 * m);
    c.expect(!sq::lp_feasible(dw, Rational(0), 2).feasible, [&] { return str("dw degree 2 feasible at m=", m); });
    c.expect(sq::qe_lower_bound(dw) >= 2, [&] { return str("dw lower bound below 2 at m=", m); });
    const auto a = sq::verify_exact({sq::AlgorithmId::F1, 2 * m + 1}, f1);
    const auto b = sq::verify_exact({sq::AlgorithmId::Dw1, 4 * m}, dw);
    c.expect(a.all_exact && a.worst_case_queries == 2, [&] { return str("f1 measured cost at m=", m); });
    c.expect(b.all_exact && b.worst_case_queries == 2, [&] { return str("dw1 measured cost at m=", m); });
    const int d = sq::degree(f1, Rational(0));
    f1_degrees += str(m == 1 ? "" : ",", d);
    if (d < 3) f1_degree_ok = false;
  }
  c.expect(f1_degree_ok, [&] {
    return str("deg(f1(2m+1,m)) for m=1..5 is [", f1_degrees,
               "], expected >= 3; dw degree bound and both 2-query costs hold");
  });
}

void criterion_identities(Check& c) {
  for (int k = 1; k <= 6; ++k) {
    for (int n = 2 * k + 2; n <= 30; ++n) {
      c.expect(sq::check_identity(n, k), [&] { return str("identity fails at n=", n, " k=", k); });
      c.expect(!sq::binom_det(n, k).is_zero(), [&] { return str("determinant vanishes at n=", n, " k=", k); });
    }
  }
  for (long p = 0; p <= 40; ++p) {
    for (long l = -3; l <= p + 3; ++l) {
      c.expect(sq::helper_identity(p, l), [&] { return str("helper identity fails at p=", p, " l=", l); });
    }
  }
}

void criterion_simulator(Check& c) {
  for (int m = 1; m <= 16; ++m) {
    for (int t = 0; t <= m; ++t) {
      const Rational closed = Rational((m - 2 * t) * (m - 2 * t), m * m) + Rational(4 * t * (m - t), m * m);
      c.expect(closed == Rational(1), [&] { return str("normalization identity fails at m=", m, " t=", t); });
      sq::Bits x(static_cast<std::size_t>(m), 0);
      for (int i = 0; i < t; ++i) x[static_cast<std::size_t>(i)] = 1;
      const auto d = sq::xquery_distribution(x);
      c.expect(std::abs(d.total() - 1.0) < kTol, [&] { return str("xquery norm drift at m=", m, " t=", t); });
    }
  }

  auto compare = [&](const sq::OutcomeDistribution& sim, const std::map<sq::BasisLabel, Rational>& exact,
                     const sq::Bits& x, const char* what) {
    for (const auto& o : sim.outcomes) {
      const auto it = exact.find(o.label);
      const double want = it == exact.end() ? 0.0 : it->second.to_double();
      c.expect(std::abs(o.probability - want) < kTol,
               [&] { return str(what, " mismatch on ", sq::bits_to_string(x), " at ", o.label.to_string()); });
    }
    for (const auto& [label, p] : exact) {
      c.expect(std::abs(sim.probability_of(label) - p.to_double()) < kTol,
               [&] { return str(what, " misses ", label.to_string(), " on ", sq::bits_to_string(x)); });
    }
  };
  for (int n = 1; n <= 12 && c.ok(); ++n) {
    for (std::uint32_t v = 0; v < (1U << n) && c.ok(); ++v) {
      const auto x = bits_of(v, n);
      compare(sq::xquery_distribution(x), sq::oracle::xquery_probabilities(x), x, "xquery");
      compare(sq::grover_distribution(x), sq::oracle::grover_probabilities(x), x, "grover1");
    }
  }

  // Branch probabilities on every input, promised or not.
  using Id = sq::AlgorithmId;
  std::vector<sq::AlgorithmSpec> specs;
  for (int n = 2; n <= 8; n += 2) {
    for (int k = 0; 2 * k < n; ++k) specs.push_back({Id::Dj, n, k});
  }
  for (int n : {3, 5, 7, 9}) specs.insert(specs.end(), {{Id::F1, n}, {Id::F3, n}, {Id::Dhw, n, n / 2 + 1}});
  for (int n : {4, 8}) specs.insert(specs.end(), {{Id::Dw1, n}, {Id::Dw2, n}, {Id::Grover1, n}, {Id::Xquery, n}});
  for (int k = 2; k <= 5; ++k) specs.push_back({Id::F2, 8, k});
  for (int n : {5, 7, 9}) specs.push_back({Id::F4, n});
  specs.push_back({Id::Dw, 5, 1, 5});
  specs.push_back({Id::Dw, 8, 0, 2});
  for (const auto& spec : specs) {
    for (std::uint32_t v = 0; v < (1U << spec.n) && c.ok(); ++v) {
      const auto run = sq::run_algorithm(spec, bits_of(v, spec.n));
      c.expect(std::abs(run.total_probability() - 1.0) < kTol,
               [&] { return str(spec.to_string(), " branches sum to ", run.total_probability()); });
    }
  }
}

// Every algorithm configuration available at input length n.
std::vector<sq::AlgorithmSpec> specs_at(int n) {
  using Id = sq::AlgorithmId;
  std::vector<sq::AlgorithmSpec> out;
  for (Id id : {Id::Dj, Id::Dhw, Id::F1, Id::F3, Id::Dw1, Id::Dw2, Id::Dw, Id::F2, Id::F4}) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        const sq::AlgorithmSpec spec{id, n, k, l};
        try {
          sq::validate(spec);
        } catch (const std::invalid_argument&) {
          continue;
        }
        // Drop duplicates for algorithms that ignore k or l.
        const bool uses_k = id == Id::Dj || id == Id::Dhw || id == Id::Dw || id == Id::F2;
        if ((!uses_k && k != 0) || (id != Id::Dw && l != 0)) continue;
        out.push_back(spec);
      }
    }
  }
  return out;
}

void criterion_isomorphism(Check& c) {
  std::mt19937_64 rng(0x5eed2026);
  for (int n = 4; n <= 8; ++n) {
    const auto specs = specs_at(n);
    for (int trial = 0; trial < 200 && c.ok(); ++trial) {
      const auto f = sq::oracle::random_function(n, rng);
      const int d = sq::degree(f, Rational(0));
      const int dc = sq::d_complexity(f);
      for (const auto& g : sq::isomorphs(f)) {
        c.expect(sq::degree(g, Rational(0)) == d, [&] { return "degree differs across orbit of " + f.to_string(); });
        c.expect(sq::d_complexity(g) == dc, [&] { return "D(f) differs across orbit of " + f.to_string(); });
      }

      // A random sub-function of a random promise, with some values flipped
      // so that failing verifications are compared as well.
      const auto spec = specs[rng() % specs.size()];
      const auto promise = sq::promise_function(spec);
      std::vector<sq::FnValue> v(promise.values().begin(), promise.values().end());
      for (auto& e : v) {
        if (e == sq::FnValue::Undefined) continue;
        const auto roll = rng() % 8;
        if (roll == 0) e = sq::FnValue::Undefined;
        if (roll == 1) e = e == sq::FnValue::One ? sq::FnValue::Zero : sq::FnValue::One;
      }
      const sq::SymPartialFn sub(v);
      const auto base = sq::verify_exact(spec, sub);
      for (auto t : sq::kAllIsomorphisms) {
        auto wrapped = spec;
        wrapped.transform = t;
        const auto r = sq::verify_exact(wrapped, sq::apply(t, sub));
        c.expect(r.all_exact == base.all_exact && r.worst_case_queries == base.worst_case_queries &&
                     r.failing_inputs == base.failing_inputs && r.inputs_checked == base.inputs_checked,
                 [&] { return str(wrapped.to_string(), " on ", sub.to_string(), " differs from the base run"); });
      }
    }
  }
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "generalized Deutsch-Jozsa: exact, k+1 queries, degree 2k+2, D = n/2+k+1", criterion_dj},
      {2, "DJ_n^0 degree certificates and explicit witness, even n <= 16", criterion_example_one},
      {3, "explicit degree-2 witnesses for f2, f3 and f4", criterion_degree_two_witnesses},
      {4, "degree <= 2 classification vs LP, all functions n = 4..6", criterion_classification},
      {5, "two-, four- and five-query algorithms exact within budget", criterion_algorithms},
      {6, "degree-2 infeasibility certifies optimal 2-query algorithms", criterion_optimality},
      {7, "binomial determinant identity and helper identity", criterion_identities},
      {8, "simulator invariants and exact closed forms", criterion_simulator},
      {9, "isomorphism invariance of degree, D(f) and verification", criterion_isomorphism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.ok()) {
      std::printf("criterion %d: PASS  %s (%.2f s)\n", cr.id, cr.title, secs);
    } else {
      ++failed;
      std::printf("criterion %d: FAIL  %s (%.2f s): %s\n", cr.id, cr.title, secs, check.problem().c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
