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

// symquery: command-line front end.
//
//   symquery degree    --fn F [--eps p/q]
//   symquery run       --alg A --n N [--k K] [--l L] --input BITS
//   symquery verify    --alg A --n N [--k K] [--l L] [--fn F]
//   symquery classical --fn F
//   symquery classify  --fn F
//   symquery det       --n N --k K
//   symquery families
//
// Every subcommand accepts --json. Exit status: 0 when the checked property
// holds, 1 when it does not, 2 on bad arguments or evaluation errors.

#include <exception>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "symquery/algos.hpp"
#include "symquery/classical.hpp"
#include "symquery/identities.hpp"
#include "symquery/polydeg.hpp"
#include "symquery/symfun.hpp"

namespace {

namespace sq = symquery;
using json = nlohmann::ordered_json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Options {
  std::string fn;
  std::string alg;
  std::string eps = "0";
  std::string input;
  int n = 0;
  int k = 0;
  int l = 0;
  bool json = false;
};

std::string prob_text(double p) { return fmt::format("{:.12g}", p); }

// Same 12 significant digits as the tables, but as a JSON number.
double prob_number(double p) { return std::stod(prob_text(p)); }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

using Rows = std::vector<std::pair<std::string, std::string>>;

void print_rows(const Rows& rows) {
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) fmt::print("{:<{}}  {}\n", key, width, value);
}

sq::AlgorithmSpec spec_from(const Options& o) {
  const auto id = sq::parse_algorithm_id(o.alg);
  if (!id) throw std::invalid_argument("unknown algorithm '" + o.alg + "'");
  return {*id, o.n, o.k, o.l};
}

std::string path_text(const std::vector<sq::BasisLabel>& path) {
  std::string s;
  for (const auto& label : path) {
    if (!s.empty()) s += ' ';
    s += label.to_string();
  }
  return s;
}

json path_json(const std::vector<sq::BasisLabel>& path) {
  json out = json::array();
  for (const auto& label : path) out.push_back(label.to_string());
  return out;
}

json branch_json(const sq::BranchTrace& b) {
  return {{"path", path_json(b.path)},
          {"probability", prob_number(b.probability)},
          {"output", b.output},
          {"queries", b.queries_used}};
}

void print_branch_table(const std::vector<sq::BranchTrace>& branches) {
  std::size_t path_width = 4;
  for (const auto& b : branches) path_width = std::max(path_width, path_text(b.path).size());
  fmt::print("{:>4}  {:<{}}  {:<16}  {:>6}  {:>7}\n", "#", "path", path_width, "probability",
             "output", "queries");
  int row = 0;
  for (const auto& b : branches) {
    fmt::print("{:>4}  {:<{}}  {:<16}  {:>6}  {:>7}\n", ++row, path_text(b.path), path_width,
               prob_text(b.probability), b.output, b.queries_used);
  }
}

int cmd_degree(const Options& o) {
  const auto f = sq::SymPartialFn::parse(o.fn);
  const auto eps = sq::Rational::parse(o.eps);
  const auto cert = sq::degree_certificate(f, eps);
  const int lower = sq::qe_lower_bound(f);
  if (o.json) {
    json witness = json::array();
    for (const auto& c : cert.witness.coeffs()) witness.push_back(c.to_string());
    print_json({{"command", "degree"},
                {"function", f.to_string()},
                {"eps", eps.to_string()},
                {"degree", cert.degree},
                {"witness", witness},
                {"qe_lower_bound", lower}});
  } else {
    print_rows({{"function", f.to_string()},
                {"eps", eps.to_string()},
                {"degree", std::to_string(cert.degree)},
                {"witness", cert.witness.to_string()},
                {"qe_lower_bound", std::to_string(lower)}});
  }
  return kHolds;
}

// Expected output for x under the algorithm's promise, if x is promised.
std::optional<int> promised_output(const sq::AlgorithmSpec& spec, const sq::Bits& x) {
  const int w = sq::hamming_weight(x);
  if (spec.id == sq::AlgorithmId::Grover1) return std::nullopt;
  const auto v = sq::promise_function(spec).value_at_weight(w);
  if (v == sq::FnValue::Undefined) return std::nullopt;
  return v == sq::FnValue::One ? 1 : 0;
}

int cmd_run(const Options& o) {
  const auto spec = spec_from(o);
  const auto x = sq::parse_bits(o.input);
  const auto run = sq::run_algorithm(spec, x);
  const auto expected = promised_output(spec, x);
  const bool grover = spec.id == sq::AlgorithmId::Grover1;
  if (o.json) {
    json branches = json::array();
    for (const auto& b : run.branches) branches.push_back(branch_json(b));
    json j = {{"command", "run"},
              {"algorithm", spec.to_string()},
              {"input", sq::bits_to_string(x)},
              {"weight", sq::hamming_weight(x)}};
    if (!grover) {
      j["promised"] = expected.has_value();
      j["expected"] = expected ? json(*expected) : json(nullptr);
    }
    j["branches"] = branches;
    j["total_probability"] = prob_number(run.total_probability());
    j["max_queries"] = run.max_queries();
    print_json(j);
    return kHolds;
  }
  Rows rows = {{"algorithm", spec.to_string()},
               {"input", fmt::format("{} (weight {})", sq::bits_to_string(x),
                                     sq::hamming_weight(x))}};
  if (!grover) rows.push_back({"expected", expected ? std::to_string(*expected) : "-"});
  print_rows(rows);
  if (!grover && !expected) {
    fmt::print("note: input is outside the promise; outputs below are not normative\n");
  }
  fmt::print("\n");
  print_branch_table(run.branches);
  fmt::print("\ntotal probability {}, max queries {}\n", prob_text(run.total_probability()),
             run.max_queries());
  return kHolds;
}

int cmd_verify(const Options& o) {
  const auto spec = spec_from(o);
  sq::VerificationReport report;
  if (!o.fn.empty()) {
    report = sq::verify_exact(spec, sq::SymPartialFn::parse(o.fn));
  } else if (spec.id == sq::AlgorithmId::Xquery || spec.id == sq::AlgorithmId::Grover1) {
    report = sq::verify_contract(spec);
  } else {
    report = sq::verify_exact(spec, sq::promise_function(spec));
  }
  const int budget = sq::query_budget(spec);
  const bool within_budget = report.worst_case_queries <= budget;
  if (o.json) {
    json failures = json::array();
    for (const auto& f : report.failures) {
      json entry = branch_json(f.branch);
      entry["input"] = sq::bits_to_string(f.input);
      failures.push_back(std::move(entry));
    }
    print_json({{"command", "verify"},
                {"algorithm", report.algorithm},
                {"function", report.function},
                {"inputs_checked", report.inputs_checked},
                {"branches_checked", report.branches_checked},
                {"failing_inputs", report.failing_inputs},
                {"all_exact", report.all_exact},
                {"worst_case_queries", report.worst_case_queries},
                {"query_budget", budget},
                {"max_probability_error", prob_number(report.max_probability_error)},
                {"failures", failures}});
  } else {
    print_rows({{"algorithm", report.algorithm},
                {"function", report.function},
                {"inputs checked", std::to_string(report.inputs_checked)},
                {"branches checked", std::to_string(report.branches_checked)},
                {"failing inputs", std::to_string(report.failing_inputs)},
                {"all_exact", report.all_exact ? "true" : "false"},
                {"worst-case queries", fmt::format("{} (budget {})", report.worst_case_queries,
                                                   budget)},
                {"max |sum p - 1|", prob_text(report.max_probability_error)}});
    if (!report.failures.empty()) {
      fmt::print("\nfailing branches (first {}):\n", report.failures.size());
      for (const auto& f : report.failures) {
        fmt::print("  input {}  path {}  p={}  output {}\n", sq::bits_to_string(f.input),
                   path_text(f.branch.path), prob_text(f.branch.probability), f.branch.output);
      }
    }
  }
  return report.all_exact && within_budget ? kHolds : kFails;
}

int cmd_classical(const Options& o) {
  const auto f = sq::SymPartialFn::parse(o.fn);
  const int d = sq::d_complexity(f);
  if (o.json) {
    print_json({{"command", "classical"}, {"function", f.to_string()}, {"d_complexity", d}});
  } else {
    print_rows({{"function", f.to_string()}, {"D(f)", std::to_string(d)}});
  }
  return kHolds;
}

int cmd_classify(const Options& o) {
  const auto f = sq::SymPartialFn::parse(o.fn);
  const auto tag = sq::classify_deg2(f);
  const std::string text = tag ? tag->to_string() : "none";
  if (o.json) {
    print_json({{"command", "classify"},
                {"function", f.to_string()},
                {"family", tag ? json(text) : json(nullptr)}});
  } else {
    print_rows({{"function", f.to_string()}, {"family", text}});
  }
  return tag ? kHolds : kFails;
}

int cmd_det(const Options& o) {
  const auto lhs = sq::binom_det(o.n, o.k);
  const auto rhs = sq::binom_det_closed(o.n, o.k);
  const bool match = lhs == rhs;
  if (o.json) {
    print_json({{"command", "det"},
                {"n", o.n},
                {"k", o.k},
                {"determinant", lhs.to_string()},
                {"closed_form", rhs.to_string()},
                {"match", match}});
  } else {
    print_rows({{"determinant", lhs.to_string()},
                {"closed form", rhs.to_string()},
                {"match", match ? "true" : "false"}});
  }
  return match ? kHolds : kFails;
}

struct FamilyInfo {
  const char* syntax;
  const char* range;
  const char* meaning;
};

constexpr FamilyInfo kFunctionFamilies[] = {
    {"DJ:n,k", "n even, 0 <= k < n/2", "0 at weights <= k and >= n-k, 1 at n/2"},
    {"F1:n,k", "0 < k <= n", "0 at weight 0, 1 at weight k"},
    {"F2:n,k", "0 < k < n", "0 at weight 0, 1 at weights k and k+1"},
    {"F3:n,l", "0 < l < n", "0 at weights 0 and n, 1 at weight l"},
    {"F4:n", "n > 1", "0 at weights 0 and n, 1 at floor(n/2) and ceil(n/2)"},
    {"DW:n,k,l", "0 <= k < l <= n", "0 at weight k, 1 at weight l"},
    {"EXACT:n,k", "0 <= k <= n", "1 exactly at weight k"},
    {"THRESHOLD:n,k", "0 <= k <= n", "1 at weights >= k"},
    {"OR:n / AND:n / PARITY:n / MAJ:n", "n >= 1", "total symmetric functions"},
    {"literal", "length >= 2", "values b_0..b_n over {0,1,*}, e.g. 0*1*0"},
};

constexpr FamilyInfo kAlgorithms[] = {
    {"xquery --n m", "m >= 1", "one query; (0,0) or a pair (i,j) with x_i != x_j"},
    {"dj --n n --k k", "n even, 0 <= k < n/2", "DJ:n,k with k+1 queries"},
    {"dhw --n n --k k", "ceil(n/2) <= k <= n", "F1:n,k with 1 query"},
    {"f1 --n n", "n odd, n >= 3", "F1:n,floor(n/2) with 2 queries"},
    {"f3 --n n", "n odd, n >= 3", "F3:n,ceil(n/2) with 2 queries"},
    {"grover1 --n n", "n >= 1", "one query; returns an index"},
    {"dw1 --n n", "4 | n", "DW:n,n/4,3n/4 with 2 queries"},
    {"dw2 --n n", "4 | n", "DW:n,0,n/4 with 2 queries"},
    {"dw --n n --k k --l l", "see README", "DW:n,k,l by padding into dw1 or dw2"},
    {"f2 --n n --k k", "n/4 <= k < n", "F2:n,k with at most 4 queries"},
    {"f4 --n n", "n odd, n >= 5", "F4:n with at most 5 queries"},
};

int cmd_families(const Options& o) {
  if (o.json) {
    auto to_json = [](const auto& table) {
      json out = json::array();
      for (const auto& e : table) {
        out.push_back({{"syntax", e.syntax}, {"range", e.range}, {"meaning", e.meaning}});
      }
      return out;
    };
    print_json({{"command", "families"},
                {"functions", to_json(kFunctionFamilies)},
                {"algorithms", to_json(kAlgorithms)}});
    return kHolds;
  }
  auto print_table = [](const char* title, const auto& table) {
    std::size_t w0 = 0;
    std::size_t w1 = 0;
    for (const auto& e : table) {
      w0 = std::max(w0, std::string(e.syntax).size());
      w1 = std::max(w1, std::string(e.range).size());
    }
    fmt::print("{}\n", title);
    for (const auto& e : table) {
      fmt::print("  {:<{}}  {:<{}}  {}\n", e.syntax, w0, e.range, w1, e.meaning);
    }
  };
  print_table("functions (--fn):", kFunctionFamilies);
  fmt::print("\n");
  print_table("algorithms (--alg):", kAlgorithms);
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum query algorithms for symmetric partial Boolean functions"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Structured output");
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  CLI::App* degree = add("degree", "Approximate degree by exact LP", cmd_degree);
  degree->add_option("--fn", o.fn, "Function spec")->required();
  degree->add_option("--eps", o.eps, "Error bound p/q (default 0)");

  CLI::App* run = add("run", "Run an algorithm on one input and list branches", cmd_run);
  run->add_option("--alg", o.alg, "Algorithm name")->required();
  run->add_option("--n", o.n, "Input length")->required();
  run->add_option("--k", o.k, "Parameter k");
  run->add_option("--l", o.l, "Parameter l");
  run->add_option("--input", o.input, "Input bitstring x_1..x_n")->required();

  CLI::App* verify = add("verify", "Check exactness over every promised input", cmd_verify);
  verify->add_option("--alg", o.alg, "Algorithm name")->required();
  verify->add_option("--n", o.n, "Input length")->required();
  verify->add_option("--k", o.k, "Parameter k");
  verify->add_option("--l", o.l, "Parameter l");
  verify->add_option("--fn", o.fn, "Function to check against (default: the promise)");

  CLI::App* classical = add("classical", "Deterministic query complexity D(f)", cmd_classical);
  classical->add_option("--fn", o.fn, "Function spec")->required();

  CLI::App* classify = add("classify", "Match against the degree <= 2 families", cmd_classify);
  classify->add_option("--fn", o.fn, "Function spec")->required();

  CLI::App* det = add("det", "Binomial determinant against its closed form", cmd_det);
  det->add_option("--n", o.n, "n")->required();
  det->add_option("--k", o.k, "k")->required();

  add("families", "List function families and algorithms", cmd_families);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  try {
    return handler(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
}
