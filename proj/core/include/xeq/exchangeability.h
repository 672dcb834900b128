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

// Conditionally i.i.d. (completely positive) joint distributions:
// certification, factorization, and the correlation schemes they induce.

#ifndef XEQ_EXCHANGEABILITY_H_
#define XEQ_EXCHANGEABILITY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xeq/game.h"
#include "xeq/rational.h"

namespace xeq {

struct CpAtom {
  double weight = 0;
  std::vector<double> x;
};

struct ExactCpAtom {
  Rational weight;
  MixedStrategy x;
};

// W ~= sum_i weight_i x_i x_i^T. When exact_atoms is nonempty the identity
// holds exactly and residual is 0; atoms then mirror exact_atoms.
struct CpFactorization {
  std::vector<CpAtom> atoms;
  std::vector<ExactCpAtom> exact_atoms;
  double residual = 0;  // max-abs reconstruction error

  bool exact() const { return !exact_atoms.empty(); }
};

struct CpOptions {
  double tol = 1e-9;
  int starts = 20;
  int iterations = 5000;
  std::uint64_t seed = 0;  // start s uses seed + s
  unsigned threads = 0;    // 0: hardware concurrency
};

// Nonnegative factorization of a symmetric doubly nonnegative W. Exact
// shortcuts (rank one, diagonal) come first, then multi-start symmetric
// nonnegative coordinate descent with k = m(m+1)/2 columns, then an attempt
// to rationalize the atoms and solve for exact weights. nullopt after the
// iteration budget is spent; that is never evidence of non-membership.
// Throws std::invalid_argument for asymmetric input.
std::optional<CpFactorization> cp_factorize(const JointDistribution& w,
                                            const CpOptions& options = {});

double reconstruction_residual(const JointDistribution& w,
                               const std::vector<CpAtom>& atoms);

enum class ExchangeabilityStatus { kConditionallyIid, kNotConditionallyIid, kInconclusive };

enum class CertificateKind {
  kFactorization,
  kNegativeDirection,
  kZeroPattern,
  kAsymmetry,
  kDnnOnly,
};

const char* to_string(ExchangeabilityStatus status);
const char* to_string(CertificateKind kind);

struct ExchangeabilityVerdict {
  ExchangeabilityStatus status = ExchangeabilityStatus::kInconclusive;
  CertificateKind kind = CertificateKind::kDnnOnly;
  std::optional<CpFactorization> factorization;
  std::optional<RationalVector> negative_direction;
  // Zero-pattern: W[t][t] = 0 while W[t][t_tilde] > 0.
  // Asymmetry: W[i][j] != W[j][i].
  std::optional<std::pair<std::size_t, std::size_t>> index_pair;
  std::string note;
};

// Decision order: asymmetry, zero pattern, exact PSD test, then the
// doubly-nonnegative cone, which coincides with the completely positive cone
// for m <= 4. For m >= 5 only a found factorization proves membership.
ExchangeabilityVerdict certify_conditionally_iid(const JointDistribution& w,
                                                 const CpOptions& options = {});

// Exact re-check of whatever certificate the verdict carries.
bool verify_certificate(const JointDistribution& w, const ExchangeabilityVerdict& v);

// Hidden state i with probability weight_i; each player independently
// receives a recommendation drawn from x_i and follows it.
struct CorrelationScheme {
  std::size_t num_strategies = 0;
  std::vector<double> state_weights;
  std::vector<std::vector<double>> recommendation;
  // Present when the scheme came from an exact factorization.
  std::optional<std::vector<ExactCpAtom>> exact;
};

CorrelationScheme scheme_from_factorization(const CpFactorization& f);

// Joint distribution of the two recommendations.
RealMatrix induced_distribution(const CorrelationScheme& scheme);
std::optional<JointDistribution> induced_distribution_exact(const CorrelationScheme& scheme);

struct DeviationGain {
  std::vector<std::size_t> map;   // f(s) for each recommendation s
  double exact = 0;               // from the induced distribution
  std::optional<Rational> exact_rational;
  double estimate = 0;            // Monte-Carlo mean
  double std_error = 0;
};

struct SchemeReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string rng;
  std::vector<DeviationGain> gains;  // all m^m maps, identity included
  bool equilibrium = false;          // every exact gain <= 0 (<= tol if inexact)
  double max_exact_gain = 0;
  double max_z = 0;                  // max |estimate - exact| / std_error
};

inline constexpr std::size_t kMaxSchemeStrategies = 6;

// Throws std::invalid_argument when samples == 0 and BudgetError beyond
// kMaxSchemeStrategies strategies.
SchemeReport verify_scheme_equilibrium(const SymmetricGame& game,
                                       const CorrelationScheme& scheme,
                                       std::size_t samples, std::uint64_t seed,
                                       double tol = 1e-9);

}  // namespace xeq

#endif  // XEQ_EXCHANGEABILITY_H_
