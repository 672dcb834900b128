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

// Reference computations that share no code path with the library beyond
// the basic data types. They are slow and only meant for small inputs.

#ifndef XEQ_TESTS_SUPPORT_ORACLES_H_
#define XEQ_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "xeq/game.h"
#include "xeq/linear_system.h"
#include "xeq/rational.h"

namespace xeq::testing {

// Vertices by trying every subset of inequalities that, together with the
// equalities, pins down a unique point. Sorted, duplicate-free.
std::vector<RationalVector> brute_force_vertices(const LinearSystem& sys);

// Determinant by the Leibniz permutation sum.
Rational leibniz_determinant(const RationalMatrix& a);

// PSD by checking every principal minor with leibniz_determinant.
bool psd_by_minors(const RationalMatrix& w);

struct NashPair {
  RationalVector x;
  RationalVector y;
};

// All Nash equilibria of a 2x2 symmetric game by case analysis; nullopt for
// degenerate games (a payoff tie that creates a continuum).
std::optional<std::vector<NashPair>> closed_form_2x2_nash(const SymmetricGame& game);

// Profile probabilities of the N-player distribution given by orbit weights;
// profiles are indexed in base m with player 0 most significant.
std::vector<Rational> profile_probabilities(
    std::size_t m, std::size_t n,
    const std::vector<std::pair<std::vector<int>, Rational>>& orbit_weights);

// Correlated-equilibrium test of a distribution over profiles of the
// N-player pairwise game, one constraint per player and deviation pair.
bool npow_correlated_equilibrium(const SymmetricGame& game, std::size_t n,
                                 const std::vector<Rational>& profile_probs);

// Feasibility of a permutation-invariant distribution over all m^N profiles
// whose two-player marginal equals W.
bool profile_space_extendable(const RationalMatrix& w, std::size_t n);

// Exact check of the two-player correlated-equilibrium inequalities on a
// full (not necessarily symmetric) matrix, both players.
bool full_ce_check(const SymmetricGame& game, const RationalMatrix& p);

// Lower estimate of max sum_ij C_ij W_ij over mixtures W = sum_a l_a x_a x_a^T
// satisfying the symmetric incentive constraints. Atoms are sampled on a
// grid and improved by local mass moves; for fixed atoms the weights are
// the solution of an LP.
double mixture_search_max(const SymmetricGame& game, const RationalMatrix& c,
                          std::uint64_t seed, int samples, int local_steps);

}  // namespace xeq::testing

#endif  // XEQ_TESTS_SUPPORT_ORACLES_H_
