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

// Exact linear constraint systems and the correlated-equilibrium polytope.

#ifndef XEQ_LINEAR_SYSTEM_H_
#define XEQ_LINEAR_SYSTEM_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "xeq/game.h"
#include "xeq/rational.h"

namespace xeq {

struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
};

// {v : a.v <= b for every inequality, a.v == b for every equality}.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& inequalities() const { return ineq_; }
  const std::vector<LinearConstraint>& equalities() const { return eq_; }

  // Both throw DimensionError when coeffs.size() != num_vars().
  void add_inequality(RationalVector coeffs, Rational rhs);
  void add_equality(RationalVector coeffs, Rational rhs);
  // Appends v_i >= 0 for every variable.
  void add_nonnegativity();

  bool satisfied_by(const RationalVector& point) const;
  // Index of the first violated inequality / equality (inequalities first,
  // equalities offset by inequalities().size()).
  std::optional<std::size_t> first_violation(const RationalVector& point) const;

 private:
  std::size_t num_vars_;
  std::vector<LinearConstraint> ineq_;
  std::vector<LinearConstraint> eq_;
};

// Flat indexing of the upper triangle (i <= j) of a symmetric m x m matrix,
// row by row: (0,0), (0,1), ..., (0,m-1), (1,1), ...
class SymIndex {
 public:
  explicit SymIndex(std::size_t m) : m_(m) {}

  std::size_t m() const { return m_; }
  std::size_t size() const { return m_ * (m_ + 1) / 2; }
  // Order of arguments does not matter.
  std::size_t index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> entry(std::size_t k) const;

  RationalVector flatten(const RationalMatrix& symmetric) const;
  RationalMatrix expand(const RationalVector& flat) const;

 private:
  std::size_t m_;
};

// Correlated-equilibrium constraints of the game.
//
// Full system: m*m variables P[i][j] at index i*m + j, with row and column
// player incentive constraints sum_j (A[t][j] - A[s][j]) P[s][j] <= 0 and
// sum_i (A[t][i] - A[s][i]) P[i][s] <= 0 for every s != t, followed by
// nonnegativity and normalization.
//
// symmetric_only: the SymIndex variables of a symmetric matrix; only the row
// player's m(m-1) incentive constraints are emitted (the column player's are
// their mirror images), then nonnegativity and normalization. Incentive row
// k corresponds to the deviation pair ce_deviation_pair(m, k).
LinearSystem ce_system(const SymmetricGame& game, bool symmetric_only);

// (recommended s, deviation t) of incentive row k, in the order emitted.
std::pair<std::size_t, std::size_t> ce_deviation_pair(std::size_t m,
                                                      std::size_t k);

// Linear functional of a symmetric matrix as SymIndex coefficients:
// sum_ij C[i][j] W[i][j] = coeffs . flatten(W).
RationalVector symmetric_functional(const RationalMatrix& c);

}  // namespace xeq

#endif  // XEQ_LINEAR_SYSTEM_H_
