// Copyright 2026 The xeq Authors.
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

#include "xeq/game.h"

#include <stdexcept>
#include <utility>

namespace xeq {

SymmetricGame::SymmetricGame(RationalMatrix payoff,
                             std::vector<std::string> labels)
    : payoff_(std::move(payoff)), labels_(std::move(labels)) {
  if (!payoff_.square())
    throw DimensionError("payoff matrix must be square");
  if (payoff_.rows() < 2)
    throw DimensionError("a symmetric game needs at least 2 strategies");
  if (!labels_.empty() && labels_.size() != payoff_.rows())
    throw DimensionError("label count does not match strategy count");
}

std::string SymmetricGame::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return std::to_string(i + 1);
}

MixedStrategy::MixedStrategy(RationalVector probabilities)
    : p_(std::move(probabilities)) {
  if (p_.empty()) throw std::invalid_argument("empty mixed strategy");
  Rational sum = 0;
  for (const auto& x : p_) {
    if (x < 0) throw std::invalid_argument("negative probability");
    sum += x;
  }
  if (sum != 1) throw std::invalid_argument("probabilities must sum to 1");
}

MixedStrategy MixedStrategy::pure(std::size_t m, std::size_t i) {
  RationalVector p(m, Rational(0));
  p.at(i) = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(std::size_t m) {
  return MixedStrategy(RationalVector(m, make_rational(1, static_cast<long>(m))));
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p_.size(); ++i)
    if (p_[i] != 0) out.push_back(i);
  return out;
}

JointDistribution::JointDistribution(RationalMatrix p) : p_(std::move(p)) {
  if (!p_.square() || p_.rows() == 0)
    throw std::invalid_argument("distribution matrix must be square");
  Rational sum = 0;
  for (const auto& x : p_.data()) {
    if (x < 0) throw std::invalid_argument("negative probability");
    sum += x;
  }
  if (sum != 1) throw std::invalid_argument("probabilities must sum to 1");
}

bool JointDistribution::is_symmetric() const { return !asymmetry(); }

std::optional<std::pair<std::size_t, std::size_t>>
JointDistribution::asymmetry() const {
  for (std::size_t i = 0; i < p_.rows(); ++i)
    for (std::size_t j = i + 1; j < p_.cols(); ++j)
      if (p_(i, j) != p_(j, i)) return std::make_pair(i, j);
  return std::nullopt;
}

RationalVector JointDistribution::row_marginal() const {
  RationalVector out(p_.rows(), Rational(0));
  for (std::size_t i = 0; i < p_.rows(); ++i)
    for (std::size_t j = 0; j < p_.cols(); ++j) out[i] += p_(i, j);
  return out;
}

Rational expected_utility(const SymmetricGame& game,
                          const JointDistribution& dist) {
  const std::size_t m = game.num_strategies();
  if (dist.num_strategies() != m)
    throw DimensionError("game and distribution sizes differ");
  Rational sum = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sum += game.utility(i, j) * dist(i, j);
  return sum;
}

Rational column_expected_utility(const SymmetricGame& game,
                                 const JointDistribution& dist) {
  const std::size_t m = game.num_strategies();
  if (dist.num_strategies() != m)
    throw DimensionError("game and distribution sizes differ");
  Rational sum = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sum += game.utility(j, i) * dist(i, j);
  return sum;
}

JointDistribution outer(const MixedStrategy& x) { return outer(x, x); }

JointDistribution outer(const MixedStrategy& x, const MixedStrategy& y) {
  if (x.size() != y.size()) throw DimensionError("strategy lengths differ");
  RationalMatrix p(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) p(i, j) = x[i] * y[j];
  return JointDistribution(std::move(p));
}

SymmetricGame symmetrize(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("symmetrize: A and B must have the same shape");
  const std::size_t m1 = a.rows(), m2 = a.cols();
  const std::size_t m = m1 * m2;
  if (m < 2) throw DimensionError("symmetrized game would have fewer than 2 strategies");
  RationalMatrix u(m, m);
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t sa = s / m2, sb = s % m2;
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t ta = t / m2, tb = t % m2;
      u(s, t) = a(sa, tb) + b(ta, sb);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t s = 0; s < m; ++s)
    labels.push_back("(" + std::to_string(s / m2 + 1) + "," +
                     std::to_string(s % m2 + 1) + ")");
  return SymmetricGame(std::move(u), std::move(labels));
}

Rational npow_utility(const SymmetricGame& game,
                      const std::vector<std::size_t>& profile, std::size_t i) {
  if (profile.size() < 2) throw std::out_of_range("need at least 2 players");
  if (i >= profile.size()) throw std::out_of_range("player index out of range");
  for (std::size_t s : profile)
    if (s >= game.num_strategies())
      throw std::out_of_range("strategy index out of range");
  Rational sum = 0;
  for (std::size_t j = 0; j < profile.size(); ++j)
    if (j != i) sum += game.utility(profile[i], profile[j]);
  return sum;
}

}  // namespace xeq
