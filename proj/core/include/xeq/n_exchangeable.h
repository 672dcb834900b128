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


// N-exchangeable distributions, stored as weights on orbits of profiles under
// player permutation. An orbit is a count vector k (k_i players use strategy
// i, sum k = N); its weight is the total probability of all of its profiles.

#ifndef XEQ_N_EXCHANGEABLE_H_
#define XEQ_N_EXCHANGEABLE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xeq/game.h"
#include "xeq/linear_system.h"
#include "xeq/lp.h"
#include "xeq/rational.h"

namespace xeq {

using CountVector = std::vector<int>;

inline constexpr std::size_t kDefaultOrbitBudget = 200000;
inline constexpr int kMaxMinorityN = 64;

// C(N + m - 1, m - 1), saturating at SIZE_MAX.
std::size_t orbit_count(std::size_t m, int n);

// All count vectors, lexicographically increasing. Throws BudgetError when
// orbit_count exceeds the budget.
std::vector<CountVector> enumerate_orbits(std::size_t m, int n,
                                          std::size_t budget = kDefaultOrbitBudget);

// N! / prod k_i!
Rational multinomial(const CountVector& k);

class OrbitDistribution {
 public:
  // Zero weights are dropped. Throws std::invalid_argument unless m >= 1,
  // N >= 1, every k has length m and sums to N, weights are nonnegative and
  // sum to one.
  OrbitDistribution(std::size_t m, int n, std::map<CountVector, Rational> weights);

  static OrbitDistribution point_mass(const CountVector& k);
  // Independent play of x by all N players (multinomial orbit weights).
  static OrbitDistribution iid(const MixedStrategy& x, int n);

  std::size_t num_strategies() const { return m_; }
  int num_players() const { return n_; }
  const std::map<CountVector, Rational>& weights() const { return weights_; }
  Rational weight(const CountVector& k) const;

  friend bool operator==(const OrbitDistribution&, const OrbitDistribution&) = default;

 private:
  std::size_t m_;
  int n_;
  std::map<CountVector, Rational> weights_;
};

// Joint distribution of players 1 and 2. Requires N >= 2.
JointDistribution bivariate_marginal(const OrbitDistribution& d);

// Distribution of the first N - 1 players. Requires N >= 3.
OrbitDistribution drop_one_marginal(const OrbitDistribution& d);

// Variables: orbit weights in enumerate_orbits(m, N) order. Rows: w >= 0,
// sum w = 1, and bivariate_marginal == W on the upper triangle.
LinearSystem extendability_system(const JointDistribution& w, int n,
                                  std::size_t budget = kDefaultOrbitBudget);

struct ExtendabilityResult {
  bool feasible = false;
  std::optional<OrbitDistribution> extension;
  // Infeasibility proof for extendability_system(W, N).
  std::optional<FarkasCertificate> certificate;
};

// Pure extendability of W to an N-exchangeable distribution; whether W is a
// correlated equilibrium is a separate question. Throws BudgetError.
ExtendabilityResult extendability_lp(const SymmetricGame& game, const JointDistribution& w,
                                     int n, std::size_t budget = kDefaultOrbitBudget);

struct DeviationMargin {
  std::size_t recommended = 0;
  std::size_t deviation = 0;
  // Expected loss from the deviation in the pairwise game; negative means a
  // profitable deviation. The N-player game scales it by N - 1.
  Rational margin;
  Rational n_player_margin;
};

struct NExchangeableCheck {
  bool equilibrium = false;
  std::vector<DeviationMargin> margins;
};

NExchangeableCheck n_exchangeable_equilibrium_check(const SymmetricGame& game,
                                                    const OrbitDistribution& d);

// Two strategies; one point per opponent on the other strategy.
SymmetricGame minority_game();

// Odd N: mass 1/2 on each of the two most balanced orbits. Even N: all mass
// on the balanced orbit. Requires N >= 1.
OrbitDistribution minority_pi(int n);

struct MinorityRow {
  int n = 0;
  bool feasible = false;  // pi^N extends to N + 1 players
  bool unique = false;
  std::optional<OrbitDistribution> extension;
  bool extension_is_next_pi = false;
  std::optional<FarkasCertificate> certificate;
};

// Extension system for pi^N: (N+1)-orbit weights w >= 0 with
// drop_one_marginal(w) == pi^N.
LinearSystem minority_extension_system(int n);

// Rows for N = 2 .. n_max. Throws BudgetError above kMaxMinorityN and
// std::invalid_argument below 2.
std::vector<MinorityRow> minority_parity_suite(int n_max);

struct EnvelopeSample {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> counts;  // m x m, row-major
  RealMatrix frequencies;
};

// Draws an orbit, fills N envelopes with the corresponding profile in
// uniformly random order, opens two distinct envelopes and tallies the pair.
// Throws std::invalid_argument when trials == 0 or N < 2.
EnvelopeSample envelope_simulate(const OrbitDistribution& d, std::uint64_t seed,
                                 std::size_t trials);

}  // namespace xeq

#endif  // XEQ_N_EXCHANGEABLE_H_
