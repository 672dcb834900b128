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

// Exact positive semidefiniteness for small symmetric rational matrices.

#ifndef XEQ_PSD_H_
#define XEQ_PSD_H_

#include <cstddef>
#include <optional>

#include "xeq/rational.h"

namespace xeq {

inline constexpr std::size_t kMaxPsdDimension = 8;

struct PsdResult {
  bool psd = false;
  // Set when !psd: z with z^T W z < 0.
  std::optional<RationalVector> witness;
};

// The decision is taken from all 2^m - 1 principal minors; the witness comes
// from a symmetric rational elimination. The two are required to agree.
// Throws DimensionError for non-square or asymmetric input and BudgetError
// above kMaxPsdDimension.
PsdResult is_psd_exact(const RationalMatrix& w);

Rational quadratic_form(const RationalMatrix& w, const RationalVector& z);

bool verify_negative_direction(const RationalMatrix& w, const RationalVector& z);

}  // namespace xeq

#endif  // XEQ_PSD_H_
