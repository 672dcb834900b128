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

// Exact two-phase simplex over a LinearSystem.
//
// Pivoting follows Bland's rule, so the method terminates on degenerate
// problems. All arithmetic is exact; an infeasible system is reported with a
// Farkas certificate that can be re-checked independently of the solver.

#ifndef XEQ_LP_H_
#define XEQ_LP_H_

#include <optional>

#include "xeq/linear_system.h"
#include "xeq/rational.h"

namespace xeq {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
enum class Sense { kMaximize, kMinimize };

const char* to_string(LpStatus status);

// Multipliers y >= 0 (one per inequality) and z (one per equality) with
//   sum_k y_k a_k + sum_l z_l e_l == 0  and  sum_k y_k b_k + sum_l z_l d_l == -1,
// which is impossible for any point of the system.
struct FarkasCertificate {
  RationalVector inequality_multipliers;
  RationalVector equality_multipliers;
};

// Exact re-verification of a certificate against the system.
bool verify_farkas(const LinearSystem& system, const FarkasCertificate& cert);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum;        // valid when kOptimal
  RationalVector point;    // an optimal vertex when kOptimal
  std::optional<FarkasCertificate> certificate;  // set when kInfeasible
};

// Optimizes objective . v over the system. Variables are free unless the
// system itself bounds them.
LpResult lp_solve(const LinearSystem& system, const RationalVector& objective,
                  Sense sense);

// Feasibility only (objective zero).
LpResult lp_feasible(const LinearSystem& system);

}  // namespace xeq

#endif  // XEQ_LP_H_
