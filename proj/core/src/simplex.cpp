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

#include "symquery/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace symquery {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau for min sum(artificials) s.t. A x = b, x >= 0, b >= 0.
class PhaseOneTableau {
 public:
  PhaseOneTableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<std::size_t> basis, std::size_t first_artificial)
      : a_(std::move(a)),
        b_(std::move(b)),
        basis_(std::move(basis)),
        first_artificial_(first_artificial),
        cols_(a_.empty() ? 0 : a_.front().size()) {
    // Reduced costs of the Phase-I objective: an artificial column costs 1,
    // everything else 0, priced out against the starting basis.
    reduced_.assign(cols_, Rational(0));
    for (std::size_t j = first_artificial_; j < cols_; ++j) reduced_[j] = 1;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (basis_[r] < first_artificial_) continue;
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= a_[r][j];
      objective_ += b_[r];
    }
  }

  // Runs to optimality. Returns true iff the optimum is zero.
  bool solve() {
    while (true) {
      const std::size_t enter = entering_column();
      if (enter == kNone) break;
      const std::size_t leave = leaving_row(enter);
      // Phase I is bounded below by 0, so a ratio row always exists.
      if (leave == kNone) throw std::logic_error("phase-one simplex reported unbounded");
      pivot(leave, enter);
    }
    return objective_.is_zero();
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t r = 0; r < a_.size(); ++r) x[basis_[r]] = b_[r];
    return x;
  }

 private:
  // Bland: lowest-index column with negative reduced cost. Artificial
  // columns never re-enter.
  std::size_t entering_column() const {
    for (std::size_t j = 0; j < first_artificial_; ++j) {
      if (reduced_[j].sign() < 0) return j;
    }
    return kNone;
  }

  // Minimum ratio test, ties broken by the lowest basic variable index.
  std::size_t leaving_row(std::size_t col) const {
    std::size_t best = kNone;
    Rational best_ratio;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (a_[r][col].sign() <= 0) continue;
      Rational ratio = b_[r] / a_[r][col];
      if (best == kNone || ratio < best_ratio ||
          (ratio == best_ratio && basis_[r] < basis_[best])) {
        best = r;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = a_[row][col];
    for (auto& v : a_[row]) v /= p;
    b_[row] /= p;
    for (std::size_t r = 0; r < a_.size(); ++r) {
      if (r == row || a_[r][col].is_zero()) continue;
      const Rational factor = a_[r][col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!a_[row][j].is_zero()) a_[r][j] -= factor * a_[row][j];
      }
      b_[r] -= factor * b_[row];
    }
    if (!reduced_[col].is_zero()) {
      const Rational factor = reduced_[col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!a_[row][j].is_zero()) reduced_[j] -= factor * a_[row][j];
      }
      objective_ += factor * b_[row];
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::size_t first_artificial_;
  std::size_t cols_;
  std::vector<Rational> reduced_;
  Rational objective_ = 0;
};

struct Equation {
  std::vector<Rational> coeffs;  // over u and v only
  Rational rhs;
  int slack_sign = 0;  // +1, -1, or 0 for none
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(std::span<const BoundedRow> rows,
                                                         std::size_t num_vars) {
  std::vector<Equation> eqs;
  for (const auto& row : rows) {
    if (row.coeffs.size() != num_vars) {
      throw std::invalid_argument("constraint row width does not match variable count");
    }
    if (row.lower > row.upper) return std::nullopt;
    std::vector<Rational> uv(2 * num_vars);
    for (std::size_t k = 0; k < num_vars; ++k) {
      uv[k] = row.coeffs[k];
      uv[num_vars + k] = -row.coeffs[k];
    }
    if (row.lower == row.upper) {
      eqs.push_back({uv, row.lower, 0});
    } else {
      eqs.push_back({uv, row.upper, +1});
      eqs.push_back({std::move(uv), row.lower, -1});
    }
  }
  if (eqs.empty()) return std::vector<Rational>(num_vars, Rational(0));

  // Column layout: [u | v | slacks | artificials].
  std::size_t slack_count = 0;
  for (auto& e : eqs) {
    if (e.slack_sign != 0) ++slack_count;
    if (e.rhs.sign() < 0) {
      for (auto& c : e.coeffs) c = -c;
      e.rhs = -e.rhs;
      e.slack_sign = -e.slack_sign;
    }
  }
  // A slack entering with +1 on a row with b >= 0 can start in the basis;
  // other rows get an artificial.
  std::size_t artificial_count = 0;
  for (const auto& e : eqs) {
    if (e.slack_sign != +1) ++artificial_count;
  }
  const std::size_t first_slack = 2 * num_vars;
  const std::size_t first_artificial = first_slack + slack_count;
  const std::size_t cols = first_artificial + artificial_count;

  std::vector<std::vector<Rational>> a(eqs.size(), std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(eqs.size());
  std::vector<std::size_t> basis(eqs.size());
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    auto& e = eqs[r];
    for (std::size_t j = 0; j < e.coeffs.size(); ++j) a[r][j] = std::move(e.coeffs[j]);
    b[r] = e.rhs;
    if (e.slack_sign != 0) {
      a[r][next_slack] = e.slack_sign;
      if (e.slack_sign == +1) basis[r] = next_slack;
      ++next_slack;
    }
    if (e.slack_sign != +1) {
      a[r][next_artificial] = 1;
      basis[r] = next_artificial++;
    }
  }

  PhaseOneTableau tableau(std::move(a), std::move(b), std::move(basis), first_artificial);
  if (!tableau.solve()) return std::nullopt;
  const auto x = tableau.solution();
  std::vector<Rational> c(num_vars);
  for (std::size_t k = 0; k < num_vars; ++k) c[k] = x[k] - x[num_vars + k];
  return c;
}

}  // namespace symquery
