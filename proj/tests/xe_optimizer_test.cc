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


#include "xeq/xe_optimizer.h"

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.h"
#include "support/oracles.h"
#include "xeq/nash.h"
#include "xeq/psd.h"

namespace xeq {
namespace {

using testing::Q;
using testing::QM;

MembershipVerdict checked(const SymmetricGame& g, const JointDistribution& w, EquilibriumSet s) {
  auto v = membership(g, w, s);
  EXPECT_TRUE(verify_membership(g, w, v)) << to_string(s);
  return v;
}

TEST(Membership, ChickenOffDiagonal) {
  auto g = testing::chicken();
  auto w = testing::off_diagonal_2x2();
  EXPECT_EQ(checked(g, w, EquilibriumSet::kCeSym).answer, MembershipAnswer::kIn);
  auto xe = checked(g, w, EquilibriumSet::kXeSym);
  EXPECT_EQ(xe.answer, MembershipAnswer::kOut);
  ASSERT_TRUE(xe.exchangeability);
  EXPECT_TRUE(xe.exchangeability->negative_direction.has_value() ||
              xe.exchangeability->index_pair.has_value());
  EXPECT_EQ(checked(g, w, EquilibriumSet::kConvNashSym).answer, MembershipAnswer::kOut);
}

TEST(Membership, ExeqsepDistributions) {
  auto g = testing::exeqsep_game();
  auto w1 = testing::exeqsep_w1();
  EXPECT_EQ(checked(g, w1, EquilibriumSet::kCeSym).answer, MembershipAnswer::kIn);
  auto xe1 = checked(g, w1, EquilibriumSet::kXeSym);
  EXPECT_EQ(xe1.answer, MembershipAnswer::kOut);
  EXPECT_EQ(xe1.exchangeability->kind, CertificateKind::kZeroPattern);

  auto w2 = testing::exeqsep_w2();
  EXPECT_EQ(checked(g, w2, EquilibriumSet::kXeSym).answer, MembershipAnswer::kIn);
  auto cn = checked(g, w2, EquilibriumSet::kConvNashSym);
  EXPECT_EQ(cn.answer, MembershipAnswer::kOut);
  ASSERT_TRUE(cn.farkas);
}

TEST(Membership, PayoffsepZeroDiagonal) {
  auto g = testing::payoffsep_game();
  auto w1 = testing::payoffsep_w1();
  EXPECT_EQ(checked(g, w1, EquilibriumSet::kCeSym).answer, MembershipAnswer::kIn);
  auto xe = checked(g, w1, EquilibriumSet::kXeSym);
  EXPECT_EQ(xe.answer, MembershipAnswer::kOut);
  EXPECT_EQ(xe.exchangeability->kind, CertificateKind::kZeroPattern);
  EXPECT_EQ(checked(g, testing::payoffsep_w2(), EquilibriumSet::kXeSym).answer,
            MembershipAnswer::kIn);
}

TEST(Membership, AsymmetricIsOutEverywhere) {
  auto g = testing::chicken();
  JointDistribution w(QM({{"0", "1"}, {"0", "0"}}));
  for (auto s : {EquilibriumSet::kCeSym, EquilibriumSet::kXeSym, EquilibriumSet::kConvNashSym}) {
    auto v = checked(g, w, s);
    EXPECT_EQ(v.answer, MembershipAnswer::kOut);
    EXPECT_TRUE(v.asymmetry);
  }
}

TEST(Membership, IncentiveViolationCertificate) {
  auto g = testing::chicken();
  JointDistribution w(QM({{"1", "0"}, {"0", "0"}}));
  auto v = checked(g, w, EquilibriumSet::kXeSym);
  EXPECT_EQ(v.answer, MembershipAnswer::kOut);
  ASSERT_TRUE(v.violated);
  EXPECT_EQ(v.violated->recommended, 0u);
  EXPECT_EQ(v.violated->deviation, 1u);
  EXPECT_EQ(v.violated->gain, 1);
}

TEST(Membership, SymmetricNashOuterProductsAreInEverySet) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_game(rng, 2 + trial % 3, 5);
    for (const auto& x : enumerate_symmetric_nash(g).strategies) {
      auto w = outer(x);
      for (auto s : {EquilibriumSet::kCeSym, EquilibriumSet::kXeSym, EquilibriumSet::kConvNashSym})
        EXPECT_EQ(checked(g, w, s).answer, MembershipAnswer::kIn) << to_string(s);
    }
  }
}

TEST(Membership, TamperedCertificateIsRejected) {
  auto g = testing::chicken();
  auto w = testing::off_diagonal_2x2();
  auto v = membership(g, w, EquilibriumSet::kConvNashSym);
  ASSERT_TRUE(v.farkas);
  v.farkas->equality_multipliers[0] += 1;
  EXPECT_FALSE(verify_membership(g, w, v));
}

TEST(ParseSet, Names) {
  EXPECT_EQ(parse_equilibrium_set("ce"), EquilibriumSet::kCeSym);
  EXPECT_EQ(parse_equilibrium_set("xe"), EquilibriumSet::kXeSym);
  EXPECT_EQ(parse_equilibrium_set("conv-nash"), EquilibriumSet::kConvNashSym);
  EXPECT_FALSE(parse_equilibrium_set("nash"));
}

TEST(MaxUtility, PayoffsepSeparation) {
  auto g = testing::payoffsep_game();
  auto ce = max_utility(g, EquilibriumSet::kCeSym);
  ASSERT_TRUE(ce.exact_value);
  EXPECT_EQ(*ce.exact_value, Q("3/2"));
  auto cn = max_utility(g, EquilibriumSet::kConvNashSym);
  ASSERT_TRUE(cn.exact_value);
  EXPECT_EQ(*cn.exact_value, 1);
  auto xe = max_utility(g, EquilibriumSet::kXeSym);
  EXPECT_EQ(xe.method, "sdp");
  EXPECT_GE(xe.value, 17.0 / 16 - 1e-6);
  EXPECT_LE(xe.value, 1.5 - 1e-3);
  EXPECT_FALSE(xe.upper_bound);
  ASSERT_TRUE(xe.certified_lower_bound);
  EXPECT_GE(*xe.certified_lower_bound, Q("17/16"));
}

TEST(MaxUtility, ChickenCollapsesToUniform) {
  auto xe = max_utility(testing::chicken(), EquilibriumSet::kXeSym);
  EXPECT_NEAR(xe.value, 2.5, 1e-6);
  ASSERT_TRUE(xe.certified_lower_bound);
  EXPECT_EQ(*xe.certified_lower_bound, Q("5/2"));
}

TEST(MaxUtility, CoordinationSetsCoincide) {
  auto g = testing::coordination();
  auto xe = max_utility(g, EquilibriumSet::kXeSym);
  auto ce = max_utility(g, EquilibriumSet::kCeSym);
  EXPECT_EQ(xe.method, "lp-collapse");
  ASSERT_TRUE(xe.exact_value);
  EXPECT_EQ(*xe.exact_value, *ce.exact_value);
}

TEST(MaxLinear, ExeqsepCenterCellAgainstMixtureSearch) {
  auto g = testing::exeqsep_game();
  RationalMatrix c(3, 3, Rational(0));
  c(1, 1) = 1;
  auto xe = maximize_linear(g, EquilibriumSet::kXeSym, c);
  const double oracle = testing::mixture_search_max(g, c, 1, 300, 6000);
  EXPECT_NEAR(xe.value, oracle, 1e-4);
  EXPECT_LE(oracle, xe.value + 1e-6);
}

TEST(MaxLinear, PayoffsepUtilityAgainstMixtureSearch) {
  auto g = testing::payoffsep_game();
  auto xe = max_utility(g, EquilibriumSet::kXeSym);
  const double oracle = testing::mixture_search_max(g, g.payoff(), 2, 300, 6000);
  EXPECT_NEAR(xe.value, oracle, 1e-4);
}

TEST(MaxLinear, RejectsBadShape) {
  EXPECT_THROW(maximize_linear(testing::chicken(), EquilibriumSet::kCeSym, RationalMatrix(3, 3)),
               DimensionError);
}

TEST(MaxLinear, Sandwich) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 2 + trial % 3;
    auto g = testing::random_game(rng, m, 5);
    auto c = testing::random_integer_matrix(rng, m, 5);
    auto ce = maximize_linear(g, EquilibriumSet::kCeSym, c);
    auto xe = maximize_linear(g, EquilibriumSet::kXeSym, c);
    auto cn = maximize_linear(g, EquilibriumSet::kConvNashSym, c);
    ASSERT_FALSE(xe.inconclusive) << xe.note;
    EXPECT_LE(cn.value, xe.value + 1e-6) << trial;
    EXPECT_LE(xe.value, ce.value + 1e-6) << trial;
    if (xe.certified_lower_bound) {
      EXPECT_LE(*xe.certified_lower_bound, *ce.exact_value);
      EXPECT_LE(to_double(*xe.certified_lower_bound), xe.value + 1e-6);
    }
  }
}

TEST(MaxLinear, TwoStrategyCollapse) {
  std::mt19937_64 rng(8);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testing::random_game(rng, 2, 6);
    if (enumerate_symmetric_nash(g).degenerate || enumerate_nash(g).degenerate) continue;
    for (int d = 0; d < 5; ++d) {
      auto c = testing::random_integer_matrix(rng, 2, 6);
      auto xe = maximize_linear(g, EquilibriumSet::kXeSym, c);
      auto cn = maximize_linear(g, EquilibriumSet::kConvNashSym, c);
      EXPECT_NEAR(xe.value, cn.value, 1e-6) << trial;
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(MaxLinear, AsymmetricNashHalfSumIsNotExchangeable) {
  std::mt19937_64 rng(13);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = trial == 0 ? testing::chicken() : testing::random_game(rng, 2, 6);
    for (const auto& p : enumerate_nash(g).points) {
      if (p.symmetric) continue;
      RationalMatrix h(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) h(i, j) = (p.x[i] * p.y[j] + p.y[i] * p.x[j]) / 2;
      JointDistribution w(h);
      EXPECT_EQ(checked(g, w, EquilibriumSet::kCeSym).answer, MembershipAnswer::kIn);
      auto psd = is_psd_exact(h);
      ASSERT_FALSE(psd.psd);
      EXPECT_TRUE(verify_negative_direction(h, *psd.witness));
      EXPECT_EQ(checked(g, w, EquilibriumSet::kXeSym).answer, MembershipAnswer::kOut);
      ++seen;
    }
  }
  EXPECT_GT(seen, 10);
}

}  // namespace
}  // namespace xeq
