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

#include "symquery/qsim.hpp"

#include <cmath>
#include <string>

namespace symquery {
namespace {

std::int64_t pack(BasisLabel l) {
  return (static_cast<std::int64_t>(l.i) << 32) | static_cast<std::uint32_t>(l.j);
}

}  // namespace

std::string BasisLabel::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Basis::Basis(std::vector<BasisLabel> labels) : labels_(std::move(labels)) {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    const auto& l = labels_[k];
    if (l.i < 0 || l.j < 0) throw std::invalid_argument("basis label with negative index");
    if (!index_.emplace(pack(l), k).second) {
      throw std::invalid_argument("duplicate basis label " + l.to_string());
    }
    max_i_ = std::max(max_i_, l.i);
  }
}

std::optional<std::size_t> Basis::index_of(BasisLabel label) const {
  const auto it = index_.find(pack(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NonUnitaryError::NonUnitaryError(double deviation)
    : std::invalid_argument("matrix is not unitary: max |U^dag U - I| = " +
                            std::to_string(deviation)),
      deviation_(deviation) {}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw NonUnitaryError(INFINITY);
  const double dev = deviation(matrix_);
  if (!(dev <= kUnitarityTolerance)) throw NonUnitaryError(dev);
}

double UnitaryMatrix::deviation(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) return INFINITY;
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  return (gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix exchange_unitary(const Eigen::MatrixXcd& from, const Eigen::MatrixXcd& to) {
  if (from.rows() != to.rows() || from.cols() != to.cols()) {
    throw std::invalid_argument("exchange_unitary: families must have equal shape");
  }
  const Eigen::Index d = from.rows();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  u -= from * from.adjoint();
  u -= to * to.adjoint();
  u += to * from.adjoint();
  u += from * to.adjoint();
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix householder_unitary(const Eigen::VectorXcd& from, const Eigen::VectorXcd& to) {
  if (from.size() != to.size()) throw std::invalid_argument("householder_unitary: size mismatch");
  const Eigen::VectorXcd v = from - to;
  const double vv = v.squaredNorm();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Identity(from.size(), from.size());
  if (vv > 0) h -= (2.0 / vv) * (v * v.adjoint());
  return UnitaryMatrix(std::move(h));
}

QState::QState(int n, std::shared_ptr<const Basis> basis, Eigen::VectorXcd amplitudes)
    : n_(n), basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw std::invalid_argument("QState needs a basis");
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->size()) {
    throw std::invalid_argument("amplitude vector does not match basis size");
  }
  if (basis_->max_input_index() > n_) {
    throw std::invalid_argument("basis addresses input index above n");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalised: norm " +
                                std::to_string(amplitudes_.norm()));
  }
}

QState QState::basis_state(int n, std::shared_ptr<const Basis> basis, BasisLabel label) {
  const auto idx = basis->index_of(label);
  if (!idx) throw std::invalid_argument("label " + label.to_string() + " not in basis");
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
  amps(static_cast<Eigen::Index>(*idx)) = 1.0;
  return QState(n, std::move(basis), std::move(amps));
}

Complex QState::amplitude(BasisLabel label) const {
  const auto idx = basis_->index_of(label);
  return idx ? amplitudes_(static_cast<Eigen::Index>(*idx)) : Complex(0.0);
}

QState apply_oracle(const QState& s, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != s.n()) {
    throw std::invalid_argument("oracle input has " + std::to_string(x.size()) +
                                " bits, state expects " + std::to_string(s.n()));
  }
  Eigen::VectorXcd amps = s.amplitudes();
  const auto& labels = s.basis().labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const int i = labels[k].i;
    if (i >= 1 && x[static_cast<std::size_t>(i) - 1]) amps(static_cast<Eigen::Index>(k)) *= -1.0;
  }
  return QState(s.n(), s.shared_basis(), std::move(amps));
}

QState apply_map(const QState& s, const UnitaryMatrix& u) {
  if (static_cast<std::size_t>(u.dimension()) != s.basis().size()) {
    throw std::invalid_argument("unitary dimension does not match state");
  }
  return QState(s.n(), s.shared_basis(), u.matrix() * s.amplitudes());
}

double OutcomeDistribution::total() const {
  double t = 0.0;
  for (const auto& o : outcomes) t += o.probability;
  return t;
}

double OutcomeDistribution::probability_of(BasisLabel label) const {
  for (const auto& o : outcomes) {
    if (o.label == label) return o.probability;
  }
  return 0.0;
}

OutcomeDistribution measure(const QState& s) {
  OutcomeDistribution dist;
  const auto& labels = s.basis().labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const double p = std::norm(s.amplitudes()(static_cast<Eigen::Index>(k)));
    if (p >= kPruneThreshold) dist.outcomes.push_back({labels[k], p});
  }
  return dist;
}

}  // namespace symquery
