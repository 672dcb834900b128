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

#include "xeq/exchangeability.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "xeq/nash.h"
#include "xeq/psd.h"

namespace xeq {
namespace {

using testing::Q;
using testing::QM;
using testing::QV;

TEST(IsPsdExact, Examples) {
  auto b = testing::off_diagonal_2x2().matrix();
  auto res = is_psd_exact(b);
  EXPECT_FALSE(res.psd);
  ASSERT_TRUE(res.witness);
  EXPECT_LT(quadratic_form(b, *res.witness), 0);
  EXPECT_EQ(quadratic_form(b, QV({"1", "-1"})), -1);

  EXPECT_TRUE(is_psd_exact(testing::uniform_2x2().matrix()).psd);
  EXPECT_FALSE(is_psd_exact(testing::uniform_2x2().matrix()).witness);
}

TEST(IsPsdExact, HalfSumOfAsymmetricNashProducts) {
  auto x = MixedStrategy::pure(2, 0), y = MixedStrategy::pure(2, 1);
  RationalMatrix w(2, 2);
  auto xy = outer(x, y).matrix(), yx = outer(y, x).matrix();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) w(i, j) = (xy(i, j) + yx(i, j)) / 2;
  auto res = is_psd_exact(w);
  EXPECT_FALSE(res.psd);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(verify_negative_direction(w, *res.witness));
}

TEST(IsPsdExact, Errors) {
  EXPECT_THROW(is_psd_exact(QM({{"1", "2"}, {"3", "4"}})), DimensionError);
  EXPECT_THROW(is_psd_exact(RationalMatrix::identity(9)), BudgetError);
}

TEST(IsPsdExact, ZeroPivotBranch) {
  // Leading zero diagonal with a nonzero off-diagonal entry.
  auto w = QM({{"0", "1", "0"}, {"1", "3", "0"}, {"0", "0", "1"}});
  auto res = is_psd_exact(w);
  EXPECT_FALSE(res.psd);
  ASSERT_TRUE(res.witness);
  EXPECT_LT(quadratic_form(w, *res.witness), 0);
}

TEST(Properties, PsdAgreesWithLeibnizMinors) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + trial % 4;
    // Mix Gram matrices (PSD) and random symmetric ones.
    RationalMatrix w(m, m);
    if (trial % 2) {
      RationalMatrix g(m, 2);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < 2; ++c) g(i, c) = d(rng);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w(i, j) = g(i, 0) * g(j, 0) + g(i, 1) * g(j, 1);
    } else {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) w(j, i) = w(i, j) = d(rng);
    }
    auto res = is_psd_exact(w);
    EXPECT_EQ(res.psd, testing::psd_by_minors(w));
    if (!res.psd) {
      ASSERT_TRUE(res.witness);
      EXPECT_TRUE(verify_negative_direction(w, *res.witness));
    }
  }
}

TEST(Certify, ExeqsepW1ZeroPattern) {
  auto v = certify_conditionally_iid(testing::exeqsep_w1());
  EXPECT_EQ(v.status, ExchangeabilityStatus::kNotConditionallyIid);
  EXPECT_EQ(v.kind, CertificateKind::kZeroPattern);
  ASSERT_TRUE(v.index_pair);
  EXPECT_EQ(v.index_pair->first, 0u);  // W[a][a] = 0 while W[a][b] > 0
  EXPECT_EQ(v.index_pair->second, 1u);
  EXPECT_TRUE(verify_certificate(testing::exeqsep_w1(), v));
}

TEST(Certify, ExeqsepW2Factorizes) {
  auto w = testing::exeqsep_w2();
  auto v = certify_conditionally_iid(w);
  EXPECT_EQ(v.status, ExchangeabilityStatus::kConditionallyIid);
  ASSERT_EQ(v.kind, CertificateKind::kFactorization);
  ASSERT_TRUE(v.factorization);
  EXPECT_LE(v.factorization->residual, 1e-9);
  EXPECT_EQ(v.factorization->atoms.size(), 2u);
  EXPECT_TRUE(verify_certificate(w, v));
}

TEST(Certify, OffDiagonalReportsZeroPatternFirst) {
  auto v = certify_conditionally_iid(testing::off_diagonal_2x2());
  EXPECT_EQ(v.status, ExchangeabilityStatus::kNotConditionallyIid);
  EXPECT_EQ(v.kind, CertificateKind::kZeroPattern);
  // The PSD route would fire too.
  EXPECT_FALSE(is_psd_exact(testing::off_diagonal_2x2().matrix()).psd);
}

TEST(Certify, AsymmetryFirst) {
  JointDistribution w(QM({{"0", "1"}, {"0", "0"}}));
  auto v = certify_conditionally_iid(w);
  EXPECT_EQ(v.kind, CertificateKind::kAsymmetry);
  EXPECT_TRUE(verify_certificate(w, v));
}

TEST(Certify, NegativeDirection) {
  // Full diagonal, not PSD: [[1,3],[3,1]] / 8.
  JointDistribution w(QM({{"1/8", "3/8"}, {"3/8", "1/8"}}));
  auto v = certify_conditionally_iid(w);
  EXPECT_EQ(v.kind, CertificateKind::kNegativeDirection);
  EXPECT_TRUE(verify_certificate(w, v));
}

TEST(CpFactorize, RankOneIsExact) {
  auto x = MixedStrategy(QV({"1/4", "1/4", "1/2"}));
  auto f = cp_factorize(outer(x));
  ASSERT_TRUE(f);
  ASSERT_TRUE(f->exact());
  ASSERT_EQ(f->exact_atoms.size(), 1u);
  EXPECT_EQ(f->exact_atoms[0].weight, 1);
  EXPECT_EQ(f->exact_atoms[0].x, x);
  EXPECT_EQ(f->residual, 0);
}

TEST(CpFactorize, PayoffsepW2RecoversAtoms) {
  auto f = cp_factorize(testing::payoffsep_w2());
  ASSERT_TRUE(f);
  EXPECT_LE(f->residual, 1e-9);
  ASSERT_TRUE(f->exact());
  ASSERT_EQ(f->exact_atoms.size(), 2u);
  for (const auto& a : f->exact_atoms) {
    if (a.x[1] != 0) {
      EXPECT_EQ(a.weight, Q("5/7"));
      EXPECT_EQ(a.x.probabilities(), QV({"1/8", "7/8", "0"}));
    } else {
      EXPECT_EQ(a.weight, Q("2/7"));
      EXPECT_EQ(a.x.probabilities(), QV({"1/8", "0", "7/8"}));
    }
  }
}

TEST(CpFactorize, ExeqsepW2TwoAtoms) {
  auto f = cp_factorize(testing::exeqsep_w2());
  ASSERT_TRUE(f);
  EXPECT_LE(reconstruction_residual(testing::exeqsep_w2(), f->atoms), 1e-9);
  EXPECT_EQ(f->atoms.size(), 2u);
}

TEST(CpFactorize, DeterministicAcrossThreadCounts) {
  auto w = testing::exeqsep_w2();
  CpOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto a = cp_factorize(w, one), b = cp_factorize(w, four);
  ASSERT_TRUE(a && b);
  ASSERT_EQ(a->atoms.size(), b->atoms.size());
  for (std::size_t i = 0; i < a->atoms.size(); ++i) {
    EXPECT_EQ(a->atoms[i].weight, b->atoms[i].weight);
    EXPECT_EQ(a->atoms[i].x, b->atoms[i].x);
  }
}

TEST(CpFactorize, RejectsAsymmetric) {
  EXPECT_THROW(cp_factorize(JointDistribution(QM({{"0", "1"}, {"0", "0"}}))),
               std::invalid_argument);
}

TEST(Scheme, ExeqsepW2TwoEquiprobableStates) {
  auto f = cp_factorize(testing::exeqsep_w2());
  ASSERT_TRUE(f);
  auto s = scheme_from_factorization(*f);
  ASSERT_EQ(s.state_weights.size(), 2u);
  EXPECT_NEAR(s.state_weights[0], 0.5, 1e-12);
  EXPECT_NEAR(s.state_weights[1], 0.5, 1e-12);
  auto report = verify_scheme_equilibrium(testing::exeqsep_game(), s, 20000, 3);
  EXPECT_EQ(report.gains.size(), 27u);
  EXPECT_TRUE(report.equilibrium);
  for (const auto& g : report.gains) EXPECT_LE(g.exact, 1e-12);
  EXPECT_EQ(report.rng, "mt19937_64");
}

TEST(Scheme, SingleAtomIsIidPlay) {
  auto f = cp_factorize(outer(MixedStrategy::uniform(2)));
  auto s = scheme_from_factorization(*f);
  EXPECT_EQ(s.state_weights.size(), 1u);
  auto p = induced_distribution_exact(s);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, testing::uniform_2x2());
}

TEST(Scheme, PayoffsepStateProbabilities) {
  auto f = cp_factorize(testing::payoffsep_w2());
  auto s = scheme_from_factorization(*f);
  ASSERT_EQ(s.state_weights.size(), 2u);
  std::vector<double> w = s.state_weights;
  std::sort(w.begin(), w.end());
  EXPECT_NEAR(w[0], 2.0 / 7, 1e-12);
  EXPECT_NEAR(w[1], 5.0 / 7, 1e-12);
  auto report = verify_scheme_equilibrium(testing::payoffsep_game(), s, 200000, 9);
  EXPECT_TRUE(report.equilibrium);
  EXPECT_LE(report.max_z, 5.0);
}

TEST(Scheme, PointMassOnMachoDetectsGain) {
  CpFactorization f;
  f.exact_atoms.push_back({Rational(1), MixedStrategy::pure(2, 1)});
  f.atoms.push_back({1.0, {0.0, 1.0}});
  auto report = verify_scheme_equilibrium(testing::chicken(), scheme_from_factorization(f), 100, 1);
  EXPECT_FALSE(report.equilibrium);
  bool found = false;
  for (const auto& g : report.gains)
    if (g.map[1] == 0) {
      EXPECT_EQ(*g.exact_rational, 1);
      EXPECT_NEAR(g.estimate, 1.0, 1e-12);
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Properties, RandomMixturesAreConditionallyIid) {
  std::mt19937_64 rng(51);
  CpOptions quick;
  quick.starts = 2;
  quick.iterations = 500;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = 2 + trial % 3;
    const int k = 1 + trial % 4;
    RationalMatrix w(m, m, Rational(0));
    Rational total = 0;
    std::vector<std::pair<Rational, MixedStrategy>> parts;
    for (int a = 0; a < k; ++a) {
      Rational lam = 1 + static_cast<long>(rng() % 5);
      total += lam;
      parts.emplace_back(lam, testing::random_strategy(rng, m, 4));
    }
    for (auto& [lam, x] : parts)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w(i, j) += lam / total * x[i] * x[j];
    JointDistribution d(w);
    auto v = certify_conditionally_iid(d, quick);
    ASSERT_EQ(v.status, ExchangeabilityStatus::kConditionallyIid) << w;
    EXPECT_TRUE(verify_certificate(d, v));
    if (v.factorization) EXPECT_LE(reconstruction_residual(d, v.factorization->atoms), quick.tol);
  }
}

TEST(Properties, NonPsdNonnegativeHaveWitness) {
  std::mt19937_64 rng(52);
  int seen = 0;
  while (seen < 1000) {
    const std::size_t m = 2 + rng() % 3;
    auto d = testing::random_symmetric_distribution(rng, m, 6);
    if (is_psd_exact(d.matrix()).psd) continue;
    ++seen;
    auto v = certify_conditionally_iid(d);
    ASSERT_EQ(v.status, ExchangeabilityStatus::kNotConditionallyIid);
    EXPECT_TRUE(verify_certificate(d, v));
    if (v.kind == CertificateKind::kNegativeDirection)
      EXPECT_TRUE(verify_negative_direction(d.matrix(), *v.negative_direction));
  }
}

TEST(Properties, FactorizationsReconstruct) {
  // Factorized W goes through the scheme and back.
  for (const auto& w : {testing::exeqsep_w2(), testing::payoffsep_w2()}) {
    auto f = cp_factorize(w);
    ASSERT_TRUE(f);
    double wsum = 0;
    for (const auto& a : f->atoms) {
      EXPECT_GT(a.weight, 0);
      wsum += a.weight;
    }
    EXPECT_NEAR(wsum, 1.0, 1e-9);
    auto p = induced_distribution(scheme_from_factorization(*f));
    for (std::size_t i = 0; i < w.num_strategies(); ++i)
      for (std::size_t j = 0; j < w.num_strategies(); ++j)
        EXPECT_NEAR(p(i, j), to_double(w(i, j)), f->residual + 1e-12);
  }
}

}  // namespace
}  // namespace xeq
