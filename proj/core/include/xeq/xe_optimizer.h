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


// Membership in, and linear optimization over, the nested equilibrium sets
//
//   conv{x x^T : x symmetric Nash}  <=  exchangeable  <=  symmetric CE.
//
// The exchangeable set is optimized over through its doubly-nonnegative
// relaxation, which is exact for m <= 4.

#ifndef XEQ_XE_OPTIMIZER_H_
#define XEQ_XE_OPTIMIZER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xeq/exchangeability.h"
#include "xeq/game.h"
#include "xeq/linear_system.h"
#include "xeq/lp.h"
#include "xeq/rational.h"
#include "xeq/sdp.h"

namespace xeq {

enum class EquilibriumSet { kCeSym, kXeSym, kConvNashSym };
enum class MembershipAnswer { kIn, kOut, kInconclusive };

const char* to_string(EquilibriumSet set);
const char* to_string(MembershipAnswer answer);
// "ce", "xe", "conv-nash".
std::optional<EquilibriumSet> parse_equilibrium_set(std::string_view text);

// Following recommendation `recommended` loses `gain` > 0 against switching
// to `deviation`.
struct ViolatedInequality {
  std::size_t recommended = 0;
  std::size_t deviation = 0;
  Rational gain;
};

struct NashCombination {
  std::vector<MixedStrategy> strategies;
  RationalVector weights;
};

struct MembershipVerdict {
  EquilibriumSet set = EquilibriumSet::kCeSym;
  MembershipAnswer answer = MembershipAnswer::kInconclusive;
  std::optional<std::pair<std::size_t, std::size_t>> asymmetry;
  std::optional<ViolatedInequality> violated;
  std::optional<ExchangeabilityVerdict> exchangeability;  // kXeSym
  std::optional<NashCombination> combination;             // kConvNashSym, In
  // kConvNashSym, Out: infeasibility of conv_nash_system.
  std::optional<FarkasCertificate> farkas;
  std::vector<MixedStrategy> nash_strategies;  // kConvNashSym
  std::string note;
};

// Exact incentive check: the most violated (s, t) pair, if any.
std::optional<ViolatedInequality> find_ce_violation(const SymmetricGame& game,
                                                    const JointDistribution& w);

// Variables mu_k >= 0, one per strategy, with sum_k mu_k x_k x_k^T == W on
// the upper triangle.
LinearSystem conv_nash_system(const JointDistribution& w,
                              const std::vector<MixedStrategy>& strategies);

// Decision order: asymmetry, incentive constraints, then the set-specific
// test. Every Out carries a certificate; kConvNashSym is Inconclusive when
// the symmetric Nash enumeration is degenerate and no witness is found.
MembershipVerdict membership(const SymmetricGame& game, const JointDistribution& w,
                             EquilibriumSet set, const CpOptions& cp = {});

// Exact re-check of the verdict's certificate (or witness, for In).
bool verify_membership(const SymmetricGame& game, const JointDistribution& w,
                       const MembershipVerdict& verdict);

struct OptimizeOptions {
  double tol = 1e-8;
  CpOptions cp;
};

struct OptimizationResult {
  EquilibriumSet set = EquilibriumSet::kCeSym;
  double value = 0;
  RealMatrix argmax;
  // Present when value is a proven exact optimum.
  std::optional<Rational> exact_value;
  std::optional<JointDistribution> exact_argmax;
  // Exact value of a verified member of the set (kXeSym without exact_value).
  std::optional<Rational> certified_lower_bound;
  double tolerance = 0;      // 0 for exact results
  bool upper_bound = false;  // kXeSym with m >= 5: DNN relaxation only
  bool inconclusive = false;  // kConvNashSym with degenerate enumeration
  std::string method;  // "lp", "lp-collapse", "sdp", "enumeration"
  std::optional<SdpResult> sdp;
  std::string note;
};

// Maximizes sum_ij C[i][j] W[i][j] over the set.
OptimizationResult maximize_linear(const SymmetricGame& game, EquilibriumSet set,
                                   const RationalMatrix& c,
                                   const OptimizeOptions& options = {});

// Expected utility of either player.
OptimizationResult max_utility(const SymmetricGame& game, EquilibriumSet set,
                               const OptimizeOptions& options = {});

}  // namespace xeq

#endif  // XEQ_XE_OPTIMIZER_H_
