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

// Exact support enumeration for symmetric bimatrix games (B = A^T).
//
// For each candidate support the indifference conditions cut out a polytope
// of equilibria. A single point is reported as is; a polytope with two or
// more vertices is a continuum, whose vertices are reported and the game is
// flagged degenerate.

#ifndef XEQ_NASH_H_
#define XEQ_NASH_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "xeq/game.h"

namespace xeq {

inline constexpr std::size_t kMaxNashStrategies = 6;

struct NashPoint {
  MixedStrategy x;  // row player
  MixedStrategy y;  // column player
  bool symmetric = false;
  // Some unplayed strategy is also a best response.
  bool tie = false;
};

using Support = std::vector<std::size_t>;

struct NashEnumeration {
  std::vector<NashPoint> points;
  bool degenerate = false;
  std::vector<std::pair<Support, Support>> degenerate_supports;
};

struct SymmetricNashEnumeration {
  std::vector<MixedStrategy> strategies;
  std::vector<bool> ties;  // parallel to strategies
  bool degenerate = false;
  std::vector<Support> degenerate_supports;
};

// Both throw BudgetError when the game has more than kMaxNashStrategies
// strategies. Output is sorted by support size, then support, then the
// probability vectors.
NashEnumeration enumerate_nash(const SymmetricGame& game);
SymmetricNashEnumeration enumerate_symmetric_nash(const SymmetricGame& game);

// x x^T for the first symmetric equilibrium in canonical order.
JointDistribution rational_exchangeable_point(const SymmetricGame& game);

// Exact best-response checks.
bool is_nash(const SymmetricGame& game, const MixedStrategy& x,
             const MixedStrategy& y);
bool is_symmetric_nash(const SymmetricGame& game, const MixedStrategy& x);

}  // namespace xeq

#endif  // XEQ_NASH_H_
