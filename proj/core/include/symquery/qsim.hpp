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

// State-vector simulation of the phase-oracle query model.
//
// A state lives on basis vectors |i, j>, where i in {0, ..., n} addresses the
// input (i = 0 is the "no query" index) and j labels workspace. Algorithms
// alternate input-independent unitaries with the oracle
//   O_x |i, j> = (-1)^{x_i} |i, j>   (i >= 1),   O_x |0, j> = |0, j>,
// and finish with a measurement in the standard basis.

#ifndef SYMQUERY_QSIM_HPP_
#define SYMQUERY_QSIM_HPP_

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace symquery {

using Complex = std::complex<double>;

inline constexpr double kUnitarityTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kPruneThreshold = 1e-12;

struct BasisLabel {
  int i = 0;
  int j = 0;

  std::string to_string() const;
  friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

// An ordered set of basis labels. The order fixes amplitude indices and the
// order in which measurement outcomes are reported.
class Basis {
 public:
  // Throws std::invalid_argument on duplicate labels or negative indices.
  explicit Basis(std::vector<BasisLabel> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const BasisLabel& label(std::size_t index) const { return labels_.at(index); }
  std::optional<std::size_t> index_of(BasisLabel label) const;
  int max_input_index() const { return max_i_; }

 private:
  std::vector<BasisLabel> labels_;
  std::unordered_map<std::int64_t, std::size_t> index_;
  int max_i_ = 0;
};

class NonUnitaryError : public std::invalid_argument {
 public:
  explicit NonUnitaryError(double deviation);
  double deviation() const { return deviation_; }

 private:
  double deviation_;
};

// A dense square matrix checked once, at construction, to satisfy
// max |U^dagger U - I| <= kUnitarityTolerance.
class UnitaryMatrix {
 public:
  // Throws NonUnitaryError carrying the observed deviation.
  explicit UnitaryMatrix(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

  static double deviation(const Eigen::MatrixXcd& m);

 private:
  Eigen::MatrixXcd matrix_;
};

// Builds the unitary that exchanges two orthonormal families spanning
// mutually orthogonal subspaces: U from_k = to_k, U to_k = from_k, and U is
// the identity on the complement of both spans. Columns of `from` and `to`
// are the families.
UnitaryMatrix exchange_unitary(const Eigen::MatrixXcd& from, const Eigen::MatrixXcd& to);

// Householder reflection sending unit vector `from` to unit vector `to`;
// requires <from|to> to be real.
UnitaryMatrix householder_unitary(const Eigen::VectorXcd& from, const Eigen::VectorXcd& to);

// Immutable pure state. Operations return new states.
class QState {
 public:
  // Throws std::invalid_argument if the amplitude vector does not match the
  // basis, a label addresses an input index above n, or the norm is off by
  // more than kNormTolerance.
  QState(int n, std::shared_ptr<const Basis> basis, Eigen::VectorXcd amplitudes);

  static QState basis_state(int n, std::shared_ptr<const Basis> basis, BasisLabel label);

  int n() const { return n_; }
  const Basis& basis() const { return *basis_; }
  const std::shared_ptr<const Basis>& shared_basis() const { return basis_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  // Zero for labels outside the basis.
  Complex amplitude(BasisLabel label) const;
  double norm() const { return amplitudes_.norm(); }

 private:
  int n_;
  std::shared_ptr<const Basis> basis_;
  Eigen::VectorXcd amplitudes_;
};

// Phase oracle for input x (x_1 first). Throws std::invalid_argument unless
// x has exactly n bits.
QState apply_oracle(const QState& s, std::span<const std::uint8_t> x);

// s <- U s. Throws std::invalid_argument on a dimension mismatch.
QState apply_map(const QState& s, const UnitaryMatrix& u);

struct Outcome {
  BasisLabel label;
  double probability = 0.0;
};

// Outcomes in basis order, probabilities below kPruneThreshold dropped.
struct OutcomeDistribution {
  std::vector<Outcome> outcomes;

  double total() const;
  // 0 when the label is absent.
  double probability_of(BasisLabel label) const;
};

OutcomeDistribution measure(const QState& s);

}  // namespace symquery

#endif  // SYMQUERY_QSIM_HPP_
