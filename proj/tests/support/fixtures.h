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

// Games and distributions shared by the test binaries.

#ifndef XEQ_TESTS_SUPPORT_FIXTURES_H_
#define XEQ_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>

#include "xeq/game.h"
#include "xeq/rational.h"

namespace xeq::testing {

// "p/q" or integer literal.
Rational Q(const char* text);
RationalMatrix QM(std::initializer_list<std::initializer_list<const char*>> rows);
RationalVector QV(std::initializer_list<const char*> entries);

SymmetricGame chicken();            // Wimpy, Macho
SymmetricGame coordination();
SymmetricGame anticoordination();
SymmetricGame exeqsep_game();       // 3x3 game with strictly nested sets
SymmetricGame payoffsep_game();     // 3x3 game with distinct utility maxima

JointDistribution exeqsep_w1();
JointDistribution exeqsep_w2();
JointDistribution payoffsep_w1();
JointDistribution payoffsep_w2();
JointDistribution off_diagonal_2x2();  // [[0,1/2],[1/2,0]]
JointDistribution uniform_2x2();

// Small random instances with entries in [-range, range].
RationalMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t m, int range);
SymmetricGame random_game(std::mt19937_64& rng, std::size_t m, int range);
MixedStrategy random_strategy(std::mt19937_64& rng, std::size_t m, int max_weight);
// Random symmetric distribution with small denominators; zeros are likely.
JointDistribution random_symmetric_distribution(std::mt19937_64& rng, std::size_t m,
                                                int max_weight);

}  // namespace xeq::testing

#endif  // XEQ_TESTS_SUPPORT_FIXTURES_H_
