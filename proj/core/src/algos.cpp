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

#include "symquery/algos.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <unordered_map>

#include "symquery/oracle.hpp"

namespace symquery {
namespace {

constexpr BasisLabel kNoPair{0, 0};

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool reverses_input(Isomorphism t) {
  return t == Isomorphism::Reverse || t == Isomorphism::ReverseComplement;
}

bool complements_output(Isomorphism t) {
  return t == Isomorphism::Complement || t == Isomorphism::ReverseComplement;
}

// One-query Xquery circuit on m bits:
//   U_1 |0,0> = m^{-1/2} sum_i |i,0>
//   U_2 |i,0> = m^{-1/2} (|0,0> + sum_{j>i} |i,j> - sum_{j<i} |j,i>)
class XqueryCircuit {
 public:
  explicit XqueryCircuit(int m)
      : m_(m), basis_(make_basis(m)), prepare_(make_prepare()), spread_(make_spread()) {}

  QState final_state(const Bits& x) const {
    QState s = QState::basis_state(m_, basis_, kNoPair);
    s = apply_map(s, prepare_);
    s = apply_oracle(s, x);
    return apply_map(s, spread_);
  }

 private:
  static std::shared_ptr<const Basis> make_basis(int m) {
    std::vector<BasisLabel> labels{kNoPair};
    for (int i = 1; i <= m; ++i) labels.push_back({i, 0});
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) labels.push_back({i, j});
    }
    return std::make_shared<const Basis>(std::move(labels));
  }

  Eigen::Index at(BasisLabel l) const { return static_cast<Eigen::Index>(*basis_->index_of(l)); }

  UnitaryMatrix make_prepare() const {
    const auto d = static_cast<Eigen::Index>(basis_->size());
    const double amp = 1.0 / std::sqrt(static_cast<double>(m_));
    Eigen::MatrixXcd from = Eigen::MatrixXcd::Zero(d, 1);
    Eigen::MatrixXcd to = Eigen::MatrixXcd::Zero(d, 1);
    from(at(kNoPair), 0) = 1.0;
    for (int i = 1; i <= m_; ++i) to(at({i, 0}), 0) = amp;
    return exchange_unitary(from, to);
  }

  UnitaryMatrix make_spread() const {
    const auto d = static_cast<Eigen::Index>(basis_->size());
    const double amp = 1.0 / std::sqrt(static_cast<double>(m_));
    Eigen::MatrixXcd from = Eigen::MatrixXcd::Zero(d, m_);
    Eigen::MatrixXcd to = Eigen::MatrixXcd::Zero(d, m_);
    for (int i = 1; i <= m_; ++i) {
      const Eigen::Index col = i - 1;
      from(at({i, 0}), col) = 1.0;
      to(at(kNoPair), col) = amp;
      for (int j = i + 1; j <= m_; ++j) to(at({i, j}), col) = amp;
      for (int j = 1; j < i; ++j) to(at({j, i}), col) = -amp;
    }
    return exchange_unitary(from, to);
  }

  int m_;
  std::shared_ptr<const Basis> basis_;
  UnitaryMatrix prepare_;
  UnitaryMatrix spread_;
};

// One-query Grover search on n indices, |psi_0> = W|1> uniform,
// G = -W Z_1 W^dagger Z_x.
class GroverCircuit {
 public:
  explicit GroverCircuit(int n)
      : n_(n), basis_(make_basis(n)), prepare_(make_prepare(n)), diffuse_(make_diffuse()) {}

  QState final_state(const Bits& x) const {
    QState s = QState::basis_state(n_, basis_, {1, 1});
    s = apply_map(s, prepare_);
    s = apply_oracle(s, x);
    return apply_map(s, diffuse_);
  }

 private:
  static std::shared_ptr<const Basis> make_basis(int n) {
    std::vector<BasisLabel> labels;
    for (int i = 1; i <= n; ++i) labels.push_back({i, 1});
    return std::make_shared<const Basis>(std::move(labels));
  }

  static UnitaryMatrix make_prepare(int n) {
    Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(n);
    e1(0) = 1.0;
    const Eigen::VectorXcd uniform =
        Eigen::VectorXcd::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n))));
    return householder_unitary(e1, uniform);
  }

  UnitaryMatrix make_diffuse() const {
    Eigen::MatrixXcd z1 = Eigen::MatrixXcd::Identity(n_, n_);
    z1(0, 0) = -1.0;
    const Eigen::MatrixXcd& w = prepare_.matrix();
    return UnitaryMatrix(-(w * z1 * w.adjoint()));
  }

  int n_;
  std::shared_ptr<const Basis> basis_;
  UnitaryMatrix prepare_;
  UnitaryMatrix diffuse_;
};

template <class Circuit>
const Circuit& cached_circuit(int size) {
  thread_local std::map<int, std::unique_ptr<const Circuit>> cache;
  auto& slot = cache[size];
  if (!slot) slot = std::make_unique<const Circuit>(size);
  return *slot;
}

// Branch enumeration producing every trace explicitly.
class TraceSemantics {
 public:
  using Result = std::vector<BranchTrace>;

  Result leaf(int output) const { return {BranchTrace{{}, 1.0, output, 0}}; }

  // One oracle call followed by a measurement with distribution `dist`.
  template <class Child>
  Result quantum(const OutcomeDistribution& dist, Child&& child) {
    Result out;
    for (const auto& o : dist.outcomes) {
      for (auto& b : child(o.label)) {
        b.path.insert(b.path.begin(), o.label);
        b.probability *= o.probability;
        b.queries_used += 1;
        if (b.probability >= kPruneThreshold) out.push_back(std::move(b));
      }
    }
    return out;
  }

  Result classical(Result r) const {
    for (auto& b : r) b.queries_used += 1;
    return r;
  }

  Result negate_output(Result r) const {
    for (auto& b : r) b.output = 1 - b.output;
    return r;
  }

  template <class Body>
  Result memo(const std::string&, Body&& body) {
    return body();
  }
};

struct BranchSummary {
  double probability = 0.0;
  int max_queries = 0;
  std::uint64_t branches = 0;
  unsigned outputs = 0;  // bit 0: some branch outputs 0; bit 1: outputs 1; bit 2: other
};

unsigned output_mask(int output) { return output == 0 ? 1U : (output == 1 ? 2U : 4U); }

// Aggregates subtrees instead of listing them; identical sub-problems are
// evaluated once.
class SummarySemantics {
 public:
  using Result = BranchSummary;

  Result leaf(int output) const { return {1.0, 0, 1, output_mask(output)}; }

  template <class Child>
  Result quantum(const OutcomeDistribution& dist, Child&& child) {
    Result acc;
    for (const auto& o : dist.outcomes) {
      const Result s = child(o.label);
      acc.probability += o.probability * s.probability;
      acc.max_queries = std::max(acc.max_queries, s.max_queries + 1);
      acc.branches += s.branches;
      acc.outputs |= s.outputs;
    }
    return acc;
  }

  Result classical(Result r) const {
    ++r.max_queries;
    return r;
  }

  Result negate_output(Result r) const {
    const unsigned other = r.outputs & 4U;
    r.outputs = ((r.outputs & 1U) << 1) | ((r.outputs & 2U) >> 1) | other;
    return r;
  }

  template <class Body>
  Result memo(const std::string& key, Body&& body) {
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Result r = body();
    cache_.emplace(key, r);
    return r;
  }

 private:
  std::unordered_map<std::string, BranchSummary> cache_;
};

std::string stage_key(std::string_view stage, std::initializer_list<int> params, const Oracle& o) {
  std::string key(stage);
  for (int p : params) key += ":" + std::to_string(p);
  key += "|";
  key += bits_to_string(o.bits());
  return key;
}

template <class Sem>
class Executor {
 public:
  using Result = typename Sem::Result;

  explicit Executor(Sem& sem) : sem_(sem) {}

  Result xquery_bit(const Oracle& o) {
    return sem_.quantum(xquery_distribution(o.bits()), [&](BasisLabel lab) -> Result {
      return sem_.leaf(lab == kNoPair ? 0 : 1);
    });
  }

  // k rounds of "Xquery; stop with 0 on (0,0), else drop the pair", then a
  // final Xquery whose (0,0) / pair outcome is the answer.
  Result dj(int k, const Oracle& o) { return dj_round(1, k, o); }

  Result dhw(int n, int k, const Oracle& o) { return xquery_bit(o.padded(2 * k - n)); }

  Result f1(int n, const Oracle& o) {
    return sem_.memo(stage_key("f1", {n}, o), [&]() -> Result {
      if (o.query(1)) return sem_.classical(sem_.leaf(1));
      return sem_.classical(dhw(n - 1, n / 2, o.without({1})));
    });
  }

  Result f3(int n, const Oracle& o) {
    return sem_.memo(stage_key("f3", {n}, o), [&]() -> Result {
      const Oracle rest = o.without({1});
      if (o.query(1)) return sem_.classical(dj(0, rest));
      return sem_.classical(dhw(n - 1, (n + 1) / 2, rest));
    });
  }

  Result grover_index(const Oracle& o) {
    return sem_.quantum(grover_distribution(o.bits()),
                        [&](BasisLabel lab) -> Result { return sem_.leaf(lab.i); });
  }

  // Grover-1, then read the returned position (optionally negated).
  Result grover_then_read(const Oracle& o, bool negate) {
    return sem_.quantum(grover_distribution(o.bits()), [&](BasisLabel lab) -> Result {
      const int bit = o.query(lab.i);
      return sem_.classical(sem_.leaf(negate ? 1 - bit : bit));
    });
  }

  Result dw1(const Oracle& o) { return grover_then_read(o, true); }
  Result dw2(const Oracle& o) { return grover_then_read(o, false); }

  Result dw_general(int n, int k, int l, const Oracle& o) {
    if (k > 0) return dw1(o.padded((3 * l - k) / 2 - n, (l - 3 * k) / 2));
    return dw2(o.padded(4 * l - n));
  }

  Result f2(int n, int k, const Oracle& o) {
    return sem_.memo(stage_key("f2", {n, k}, o), [&]() -> Result {
      const Oracle padded = o.padded(4 * k - n);
      return sem_.quantum(grover_distribution(padded.bits()), [&](BasisLabel lab) -> Result {
        if (padded.query(lab.i)) return sem_.classical(sem_.leaf(1));
        return sem_.classical(f2_second_phase(n, k, o));
      });
    });
  }

  Result f4(int n, const Oracle& o) {
    return sem_.memo(stage_key("f4", {n}, o), [&]() -> Result {
      const Oracle rest = o.without({1});
      if (o.query(1)) return sem_.classical(f2(n - 1, n / 2, rest.complemented()));
      return sem_.classical(f2(n - 1, n / 2, rest));
    });
  }

 private:
  Result dj_round(int round, int k, const Oracle& o) {
    return sem_.memo(stage_key("dj", {round, k}, o), [&]() -> Result {
      if (round > k) return xquery_bit(o);
      return sem_.quantum(xquery_distribution(o.bits()), [&](BasisLabel lab) -> Result {
        if (lab == kNoPair) return sem_.leaf(0);
        return dj_round(round + 1, k, o.without({lab.i, lab.j}));
      });
    });
  }

  Result f2_second_phase(int n, int k, const Oracle& o) {
    return sem_.memo(stage_key("f2b", {n, k}, o), [&]() -> Result {
      const Oracle padded = o.padded(4 * (k + 1) - n);
      return sem_.quantum(grover_distribution(padded.bits()), [&](BasisLabel lab) -> Result {
        return sem_.classical(sem_.leaf(padded.query(lab.i)));
      });
    });
  }

  Sem& sem_;
};

template <class Sem>
typename Sem::Result execute(Sem& sem, const AlgorithmSpec& spec, const Bits& x) {
  const Oracle oracle = reverses_input(spec.transform) ? Oracle(x).complemented() : Oracle(x);
  Executor<Sem> ex(sem);
  typename Sem::Result r;
  switch (spec.id) {
    case AlgorithmId::Xquery:
      r = ex.xquery_bit(oracle);
      break;
    case AlgorithmId::Dj:
      r = ex.dj(spec.k, oracle);
      break;
    case AlgorithmId::Dhw:
      r = ex.dhw(spec.n, spec.k, oracle);
      break;
    case AlgorithmId::F1:
      r = ex.f1(spec.n, oracle);
      break;
    case AlgorithmId::F3:
      r = ex.f3(spec.n, oracle);
      break;
    case AlgorithmId::Grover1:
      r = ex.grover_index(oracle);
      break;
    case AlgorithmId::Dw1:
      r = ex.dw1(oracle);
      break;
    case AlgorithmId::Dw2:
      r = ex.dw2(oracle);
      break;
    case AlgorithmId::Dw:
      r = ex.dw_general(spec.n, spec.k, spec.l, oracle);
      break;
    case AlgorithmId::F2:
      r = ex.f2(spec.n, spec.k, oracle);
      break;
    case AlgorithmId::F4:
      r = ex.f4(spec.n, oracle);
      break;
  }
  if (complements_output(spec.transform)) r = sem.negate_output(std::move(r));
  return r;
}

constexpr std::array<std::pair<AlgorithmId, std::string_view>, 11> kAlgorithmNames = {{
    {AlgorithmId::Xquery, "xquery"},
    {AlgorithmId::Dj, "dj"},
    {AlgorithmId::Dhw, "dhw"},
    {AlgorithmId::F1, "f1"},
    {AlgorithmId::F3, "f3"},
    {AlgorithmId::Grover1, "grover1"},
    {AlgorithmId::Dw1, "dw1"},
    {AlgorithmId::Dw2, "dw2"},
    {AlgorithmId::Dw, "dw"},
    {AlgorithmId::F2, "f2"},
    {AlgorithmId::F4, "f4"},
}};

bool has_k(AlgorithmId id) {
  return id == AlgorithmId::Dj || id == AlgorithmId::Dhw || id == AlgorithmId::Dw ||
         id == AlgorithmId::F2;
}

void check_input_length(const AlgorithmSpec& spec, const Bits& x) {
  require(static_cast<int>(x.size()) == spec.n,
          spec.to_string() + " expects an input of " + std::to_string(spec.n) + " bits, got " +
              std::to_string(x.size()));
}

}  // namespace

std::string_view to_string(AlgorithmId id) {
  for (const auto& [value, name] : kAlgorithmNames) {
    if (value == id) return name;
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm_id(std::string_view name) {
  for (const auto& [value, text] : kAlgorithmNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

std::string AlgorithmSpec::to_string() const {
  std::string s = std::string(symquery::to_string(id)) + "(n=" + std::to_string(n);
  if (has_k(id)) s += ",k=" + std::to_string(k);
  if (id == AlgorithmId::Dw) s += ",l=" + std::to_string(l);
  s += ")";
  if (transform != Isomorphism::Identity) s += "[" + std::string(symquery::to_string(transform)) + "]";
  return s;
}

void validate(const AlgorithmSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  const int l = spec.l;
  require(n >= 1, "input length must be positive");
  switch (spec.id) {
    case AlgorithmId::Xquery:
      break;
    case AlgorithmId::Dj:
      require(n % 2 == 0 && k >= 0 && 2 * k < n, "dj needs even n and 0 <= k < n/2");
      break;
    case AlgorithmId::Dhw:
      require((n + 1) / 2 <= k && k <= n, "dhw needs ceil(n/2) <= k <= n");
      break;
    case AlgorithmId::F1:
    case AlgorithmId::F3:
      require(n >= 3 && n % 2 == 1, std::string(symquery::to_string(spec.id)) + " needs odd n >= 3");
      break;
    case AlgorithmId::Grover1:
      require(spec.transform == Isomorphism::Identity,
              "grover1 returns an index and cannot be wrapped by an isomorphism");
      break;
    case AlgorithmId::Dw1:
    case AlgorithmId::Dw2:
      require(n % 4 == 0, std::string(symquery::to_string(spec.id)) + " needs n divisible by 4");
      break;
    case AlgorithmId::Dw: {
      const bool padded_route = k > 0 && 3 * k < n && l <= n && 3 * l >= 2 * n + k &&
                                l >= 3 * k && (l - k) % 2 == 0;
      const bool zero_route = k == 0 && 4 * l >= n && l < n / 2;
      if (!padded_route && !zero_route) {
        throw Unsupported("no two-query padding reduction for DW_" + std::to_string(n) + "^{" +
                          std::to_string(k) + "," + std::to_string(l) + "}");
      }
      break;
    }
    case AlgorithmId::F2:
      require(k > 0 && 4 * k >= n && k < n, "f2 needs n/4 <= k < n");
      break;
    case AlgorithmId::F4:
      require(n >= 5 && n % 2 == 1, "f4 needs odd n >= 5");
      break;
  }
}

SymPartialFn promise_function(const AlgorithmSpec& spec) {
  validate(spec);
  const int n = spec.n;
  auto base = [&]() -> SymPartialFn {
    switch (spec.id) {
      case AlgorithmId::Xquery: {
        std::vector<FnValue> v(static_cast<std::size_t>(n) + 1, FnValue::Undefined);
        v.front() = FnValue::Zero;
        v.back() = FnValue::Zero;
        if (n % 2 == 0) v[static_cast<std::size_t>(n / 2)] = FnValue::One;
        return SymPartialFn(std::move(v));
      }
      case AlgorithmId::Dj:
        return family_dj(n, spec.k);
      case AlgorithmId::Dhw:
        return family_f1(n, spec.k);
      case AlgorithmId::F1:
        return family_f1(n, n / 2);
      case AlgorithmId::F3:
        return family_f3(n, (n + 1) / 2);
      case AlgorithmId::Grover1:
        break;
      case AlgorithmId::Dw1:
        return family_dw(n, n / 4, 3 * n / 4);
      case AlgorithmId::Dw2:
        return family_dw(n, 0, n / 4);
      case AlgorithmId::Dw:
        return family_dw(n, spec.k, spec.l);
      case AlgorithmId::F2:
        return family_f2(n, spec.k);
      case AlgorithmId::F4:
        return family_f4(n);
    }
    throw std::invalid_argument("grover1 returns an index, not a Boolean value");
  };
  return apply(spec.transform, base());
}

int query_budget(const AlgorithmSpec& spec) {
  switch (spec.id) {
    case AlgorithmId::Xquery:
    case AlgorithmId::Dhw:
    case AlgorithmId::Grover1:
      return 1;
    case AlgorithmId::Dj:
      return spec.k + 1;
    case AlgorithmId::F1:
    case AlgorithmId::F3:
    case AlgorithmId::Dw1:
    case AlgorithmId::Dw2:
    case AlgorithmId::Dw:
      return 2;
    case AlgorithmId::F2:
      return 4;
    case AlgorithmId::F4:
      return 5;
  }
  return 0;
}

double AlgorithmRun::total_probability() const {
  double t = 0.0;
  for (const auto& b : branches) t += b.probability;
  return t;
}

int AlgorithmRun::max_queries() const {
  int q = 0;
  for (const auto& b : branches) q = std::max(q, b.queries_used);
  return q;
}

QState xquery_final_state(const Bits& x) {
  require(!x.empty(), "xquery needs m >= 1");
  return cached_circuit<XqueryCircuit>(static_cast<int>(x.size())).final_state(x);
}

QState grover_final_state(const Bits& x) {
  require(!x.empty(), "grover1 needs n >= 1");
  return cached_circuit<GroverCircuit>(static_cast<int>(x.size())).final_state(x);
}

OutcomeDistribution xquery_distribution(const Bits& x) { return measure(xquery_final_state(x)); }
OutcomeDistribution grover_distribution(const Bits& x) { return measure(grover_final_state(x)); }

AlgorithmRun run_algorithm(const AlgorithmSpec& spec, const Bits& x) {
  validate(spec);
  check_input_length(spec, x);
  TraceSemantics sem;
  return {x, execute(sem, spec, x)};
}

AlgorithmRun xquery(const Bits& x) {
  return run_algorithm({AlgorithmId::Xquery, static_cast<int>(x.size())}, x);
}
AlgorithmRun dj(int n, int k, const Bits& x) { return run_algorithm({AlgorithmId::Dj, n, k}, x); }
AlgorithmRun dhw(int n, int k, const Bits& x) { return run_algorithm({AlgorithmId::Dhw, n, k}, x); }
AlgorithmRun f1(int n, const Bits& x) { return run_algorithm({AlgorithmId::F1, n}, x); }
AlgorithmRun f3(int n, const Bits& x) { return run_algorithm({AlgorithmId::F3, n}, x); }
AlgorithmRun grover1(const Bits& x) {
  return run_algorithm({AlgorithmId::Grover1, static_cast<int>(x.size())}, x);
}
AlgorithmRun dw1(int n, const Bits& x) { return run_algorithm({AlgorithmId::Dw1, n}, x); }
AlgorithmRun dw2(int n, const Bits& x) { return run_algorithm({AlgorithmId::Dw2, n}, x); }
AlgorithmRun dw_general(int n, int k, int l, const Bits& x) {
  return run_algorithm({AlgorithmId::Dw, n, k, l}, x);
}
AlgorithmRun f2(int n, int k, const Bits& x) { return run_algorithm({AlgorithmId::F2, n, k}, x); }
AlgorithmRun f4(int n, const Bits& x) { return run_algorithm({AlgorithmId::F4, n}, x); }

VerificationReport verify_exact(const AlgorithmSpec& spec, const SymPartialFn& f) {
  const SymPartialFn promise = promise_function(spec);
  if (promise.n() != f.n()) {
    throw std::invalid_argument("domain mismatch: " + spec.to_string() + " reads " +
                                std::to_string(promise.n()) + " bits, function has n = " +
                                std::to_string(f.n()));
  }
  for (int w : f.domain_weights()) {
    if (promise.value_at_weight(w) == FnValue::Undefined) {
      throw std::invalid_argument("domain mismatch: weight " + std::to_string(w) +
                                  " is outside the promise of " + spec.to_string());
    }
  }

  VerificationReport report;
  report.algorithm = spec.to_string();
  report.function = f.to_string();
  SummarySemantics sem;
  for_each_domain_input(f, [&](const Bits& x) {
    const BranchSummary s = execute(sem, spec, x);
    const int expected = f.value_at_weight(hamming_weight(x)) == FnValue::One ? 1 : 0;
    ++report.inputs_checked;
    report.branches_checked += s.branches;
    report.worst_case_queries = std::max(report.worst_case_queries, s.max_queries);
    report.max_probability_error =
        std::max(report.max_probability_error, std::abs(s.probability - 1.0));
    if (s.outputs == output_mask(expected)) return;
    ++report.failing_inputs;
    if (report.failures.size() >= kMaxReportedFailures) return;
    TraceSemantics trace;
    for (auto& b : execute(trace, spec, x)) {
      if (b.output == expected) continue;
      report.failures.push_back({x, std::move(b)});
      if (report.failures.size() >= kMaxReportedFailures) break;
    }
  });
  report.all_exact = report.failing_inputs == 0;
  return report;
}

VerificationReport verify_contract(const AlgorithmSpec& spec) {
  validate(spec);
  const int n = spec.n;
  VerificationReport report;
  report.algorithm = spec.to_string();
  report.function = "contract";

  std::vector<int> weights;
  if (spec.id == AlgorithmId::Xquery) {
    for (int w = 0; w <= n; ++w) weights.push_back(w);
  } else if (spec.id == AlgorithmId::Grover1) {
    require(n % 4 == 0, "grover1 contract needs n divisible by 4");
    weights = {n / 4, 3 * n / 4};
  } else {
    throw std::invalid_argument("verify_contract applies to xquery and grover1 only");
  }
  std::vector<FnValue> mask(static_cast<std::size_t>(n) + 1, FnValue::Undefined);
  for (int w : weights) mask[static_cast<std::size_t>(w)] = FnValue::Zero;

  for_each_domain_input(SymPartialFn(std::move(mask)), [&](const Bits& x) {
    const AlgorithmRun run = run_algorithm(spec, x);
    const int w = hamming_weight(x);
    ++report.inputs_checked;
    report.branches_checked += run.branches.size();
    report.worst_case_queries = std::max(report.worst_case_queries, run.max_queries());
    report.max_probability_error =
        std::max(report.max_probability_error, std::abs(run.total_probability() - 1.0));
    bool input_ok = true;
    for (const auto& b : run.branches) {
      const BasisLabel& lab = b.path.front();
      bool ok = false;
      if (spec.id == AlgorithmId::Xquery) {
        ok = lab == kNoPair ? 2 * w != n
                            : x[static_cast<std::size_t>(lab.i) - 1] !=
                                  x[static_cast<std::size_t>(lab.j) - 1];
      } else {
        const int want = w == n / 4 ? 1 : 0;
        ok = x[static_cast<std::size_t>(lab.i) - 1] == want;
      }
      if (ok) continue;
      input_ok = false;
      if (report.failures.size() < kMaxReportedFailures) report.failures.push_back({x, b});
    }
    if (!input_ok) ++report.failing_inputs;
  });
  report.all_exact = report.failing_inputs == 0;
  return report;
}

}  // namespace symquery
