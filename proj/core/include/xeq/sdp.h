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

// Small dense semidefinite programs over symmetric m x m matrices W:
//
//   maximize  c . w   subject to  A w <= b,  E w = d,  W >= 0 (PSD),
//
// where w is the upper triangle of W in SymIndex order. The solver is a
// log-barrier path-following method with damped Newton steps; it is meant
// for m <= 6 or so.

#ifndef XEQ_SDP_H_
#define XEQ_SDP_H_

#include <cstddef>
#include <string>
#include <vector>

#include "xeq/linear_system.h"
#include "xeq/rational.h"

namespace xeq {

struct SdpConstraint {
  std::vector<double> coeffs;
  double rhs = 0;
};

class SdpProblem {
 public:
  // Starts with the normalization sum_ij W_ij = 1 and, unless disabled,
  // entrywise nonnegativity.
  explicit SdpProblem(std::size_t m, bool nonnegative = true);

  // Copies the rows of a system over SymIndex(m) variables.
  static SdpProblem from_system(std::size_t m, const LinearSystem& sys,
                                bool nonnegative = true);

  std::size_t m() const { return m_; }
  std::size_t num_vars() const { return m_ * (m_ + 1) / 2; }

  void set_objective(std::vector<double> c);
  // Symmetric matrix of coefficients: objective sum_ij C_ij W_ij.
  void set_objective_matrix(const RealMatrix& c);
  void add_inequality(std::vector<double> coeffs, double rhs);
  void add_equality(std::vector<double> coeffs, double rhs);

  const std::vector<double>& objective() const { return c_; }
  const std::vector<SdpConstraint>& inequalities() const { return ineq_; }
  const std::vector<SdpConstraint>& equalities() const { return eq_; }

 private:
  std::size_t m_;
  std::vector<double> c_;
  std::vector<SdpConstraint> ineq_;
  std::vector<SdpConstraint> eq_;
};

enum class SdpStatus { kOptimal, kInfeasible, kNumericalFailure };

const char* to_string(SdpStatus status);

struct SdpResult {
  SdpStatus status = SdpStatus::kNumericalFailure;
  double value = 0;
  RealMatrix w;
  std::vector<double> flat;
  double gap = 0;            // barrier duality-gap bound nu / t
  double max_violation = 0;  // linear rows, measured on the original problem
  double min_eigenvalue = 0;
  // Amount by which all inequalities and the PSD constraint were loosened
  // because the feasible set has no interior (0 when not needed).
  double relaxation = 0;
  int newton_steps = 0;
  std::string diagnostics;
};

SdpResult sdp_solve(const SdpProblem& problem, double tol = 1e-8);

}  // namespace xeq

#endif  // XEQ_SDP_H_
