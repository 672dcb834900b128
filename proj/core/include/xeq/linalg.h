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

// Exact dense linear algebra over the rationals.

#ifndef XEQ_LINALG_H_
#define XEQ_LINALG_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "xeq/rational.h"

namespace xeq {

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
Rational determinant(RationalMatrix m);

// Solution set {particular + basis * t} of A x = b.
struct AffineSolution {
  RationalVector particular;           // free variables set to zero
  std::vector<RationalVector> basis;   // null-space basis of A
  bool unique() const { return basis.empty(); }
};

// std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const RationalMatrix& a,
                                           const RationalVector& b);

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

// Rescales a nonzero vector so that its entries are coprime integers with the
// first nonzero entry positive. The zero vector is returned unchanged.
RationalVector primitive_integer(RationalVector v);

}  // namespace xeq

#endif  // XEQ_LINALG_H_
