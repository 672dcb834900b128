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

// Symmetric bimatrix games, joint distributions over strategy profiles and
// mixed strategies.
//
// A symmetric game stores only the row player's payoff matrix A; the column
// player's payoff is A^T by definition. Strategy indices are 0-based.

#ifndef XEQ_GAME_H_
#define XEQ_GAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xeq/rational.h"

namespace xeq {

class SymmetricGame {
 public:
  // Throws DimensionError unless payoff is square with at least 2 rows, and
  // labels is empty or has one entry per strategy.
  explicit SymmetricGame(RationalMatrix payoff,
                         std::vector<std::string> labels = {});

  std::size_t num_strategies() const { return payoff_.rows(); }
  const RationalMatrix& payoff() const { return payoff_; }
  // u1(row, col): payoff of the player choosing `row` against `col`.
  const Rational& utility(std::size_t row, std::size_t col) const {
    return payoff_(row, col);
  }
  const std::vector<std::string>& labels() const { return labels_; }
  // labels()[i] when present, otherwise the 1-based index.
  std::string label(std::size_t i) const;

 private:
  RationalMatrix payoff_;
  std::vector<std::string> labels_;
};

class MixedStrategy {
 public:
  // Throws std::invalid_argument unless entries are >= 0 and sum to 1.
  explicit MixedStrategy(RationalVector probabilities);

  static MixedStrategy pure(std::size_t m, std::size_t i);
  static MixedStrategy uniform(std::size_t m);

  std::size_t size() const { return p_.size(); }
  const Rational& operator[](std::size_t i) const { return p_[i]; }
  const RationalVector& probabilities() const { return p_; }
  std::vector<std::size_t> support() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  RationalVector p_;
};

class JointDistribution {
 public:
  // Throws std::invalid_argument unless P is square (m >= 1), entrywise
  // nonnegative, and sums to exactly one.
  explicit JointDistribution(RationalMatrix p);

  std::size_t num_strategies() const { return p_.rows(); }
  const RationalMatrix& matrix() const { return p_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return p_(i, j);
  }
  bool is_symmetric() const;
  // First (i, j), i < j, with P[i][j] != P[j][i].
  std::optional<std::pair<std::size_t, std::size_t>> asymmetry() const;
  // Distribution of the row player's recommendation.
  RationalVector row_marginal() const;

  friend bool operator==(const JointDistribution&,
                         const JointDistribution&) = default;

 private:
  RationalMatrix p_;
};

// u1(pi) = sum_ij A[i][j] P[i][j]. For symmetric P this is also the column
// player's utility.
Rational expected_utility(const SymmetricGame& game,
                          const JointDistribution& dist);

// Column player's utility sum_ij A[j][i] P[i][j].
Rational column_expected_utility(const SymmetricGame& game,
                                 const JointDistribution& dist);

// x x^T.
JointDistribution outer(const MixedStrategy& x);
// x y^T (row player plays x, column player plays y independently).
JointDistribution outer(const MixedStrategy& x, const MixedStrategy& y);

// Symmetrization of an arbitrary bimatrix game (A, B) of shape m1 x m2: two
// copies are played at once with roles swapped. Strategy (a, b) has index
// a * m2 + b and u((a,b), (a',b')) = A[a][b'] + B[a'][b].
SymmetricGame symmetrize(const RationalMatrix& a, const RationalMatrix& b);

// Utility of player i in the N-player pairwise game: sum_{j != i} A[s_i][s_j].
Rational npow_utility(const SymmetricGame& game,
                      const std::vector<std::size_t>& profile, std::size_t i);

}  // namespace xeq

#endif  // XEQ_GAME_H_
