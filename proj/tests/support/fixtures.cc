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

#include "support/fixtures.h"

#include <utility>

namespace xeq::testing {

Rational Q(const char* text) {
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

RationalMatrix QM(std::initializer_list<std::initializer_list<const char*>> rows) {
  RationalMatrix out(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const char* e : row) out(i, j++) = Q(e);
    ++i;
  }
  return out;
}

RationalVector QV(std::initializer_list<const char*> entries) {
  RationalVector out;
  for (const char* e : entries) out.push_back(Q(e));
  return out;
}

SymmetricGame chicken() {
  return SymmetricGame(QM({{"4", "1"}, {"5", "0"}}), {"Wimpy", "Macho"});
}

SymmetricGame coordination() { return SymmetricGame(QM({{"1", "0"}, {"0", "1"}})); }

SymmetricGame anticoordination() {
  return SymmetricGame(QM({{"0", "1"}, {"1", "0"}}), {"A", "B"});
}

SymmetricGame exeqsep_game() {
  return SymmetricGame(QM({{"2", "2", "0"}, {"2", "1", "2"}, {"0", "2", "2"}}),
                       {"a", "b", "c"});
}

SymmetricGame payoffsep_game() {
  return SymmetricGame(QM({{"0", "1", "1"}, {"2", "1", "0"}, {"1", "0", "1"}}));
}

JointDistribution exeqsep_w1() {
  return JointDistribution(
      QM({{"0", "1/4", "0"}, {"1/4", "0", "1/4"}, {"0", "1/4", "0"}}));
}

JointDistribution exeqsep_w2() {
  return JointDistribution(
      QM({{"1/8", "1/8", "0"}, {"1/8", "1/4", "1/8"}, {"0", "1/8", "1/8"}}));
}

JointDistribution payoffsep_w1() {
  return JointDistribution(
      QM({{"0", "1/2", "0"}, {"1/2", "0", "0"}, {"0", "0", "0"}}));
}

JointDistribution payoffsep_w2() {
  return JointDistribution(QM({{"1/64", "5/64", "2/64"},
                               {"5/64", "35/64", "0"},
                               {"2/64", "0", "14/64"}}));
}

JointDistribution off_diagonal_2x2() {
  return JointDistribution(QM({{"0", "1/2"}, {"1/2", "0"}}));
}

JointDistribution uniform_2x2() {
  return JointDistribution(QM({{"1/4", "1/4"}, {"1/4", "1/4"}}));
}

RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t m, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  RationalMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = d(rng);
  return a;
}

SymmetricGame random_game(std::mt19937_64& rng, std::size_t m, int range) {
  return SymmetricGame(random_integer_matrix(rng, m, range));
}

MixedStrategy random_strategy(std::mt19937_64& rng, std::size_t m, int max_weight) {
  std::uniform_int_distribution<int> d(0, max_weight);
  RationalVector w(m);
  Rational sum = 0;
  do {
    sum = 0;
    for (auto& x : w) {
      x = d(rng);
      sum += x;
    }
  } while (sum == 0);
  for (auto& x : w) x /= sum;
  return MixedStrategy(std::move(w));
}

JointDistribution random_symmetric_distribution(std::mt19937_64& rng, std::size_t m,
                                                int max_weight) {
  std::uniform_int_distribution<int> d(0, max_weight);
  RationalMatrix w(m, m);
  Rational sum = 0;
  do {
    sum = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        w(i, j) = d(rng);
        w(j, i) = w(i, j);
        sum += i == j ? w(i, j) : Rational(2 * w(i, j));
      }
  } while (sum == 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) w(i, j) /= sum;
  return JointDistribution(std::move(w));
}

}  // namespace xeq::testing
