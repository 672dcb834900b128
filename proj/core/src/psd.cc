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

#include "xeq/psd.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "xeq/linalg.h"

namespace xeq {
namespace {

bool all_principal_minors_nonnegative(const RationalMatrix& w) {
  const std::size_t n = w.rows();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) idx.push_back(i);
    RationalMatrix sub(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) sub(r, c) = w(idx[r], idx[c]);
    if (determinant(std::move(sub)) < 0) return false;
  }
  return true;
}

// Symmetric elimination keeping D = Z^T W Z. Returns a direction with
// negative curvature, or nullopt when every pivot is usable.
std::optional<RationalVector> ldl_witness(const RationalMatrix& w) {
  const std::size_t n = w.rows();
  RationalMatrix d = w;
  RationalMatrix z = RationalMatrix::identity(n);  // column j is z_j
  for (std::size_t k = 0; k < n; ++k) {
    if (d(k, k) < 0) return z.col(k);
    if (d(k, k) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        // (z_j - a z_k)^T W (z_j - a z_k) = D_jj - 2 a D_kj = -1.
        const Rational a = (d(j, j) + 1) / (2 * d(k, j));
        RationalVector out(n);
        for (std::size_t r = 0; r < n; ++r) out[r] = z(r, j) - a * z(r, k);
        return out;
      }
      continue;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (d(k, j) == 0) continue;
      const Rational f = d(k, j) / d(k, k);
      for (std::size_t r = 0; r < n; ++r) z(r, j) -= f * z(r, k);
      for (std::size_t i = k + 1; i < n; ++i) d(i, j) -= f * d(i, k);
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      d(k, j) = 0;
      d(j, k) = 0;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i);
  }
  return std::nullopt;
}

}  // namespace

Rational quadratic_form(const RationalMatrix& w, const RationalVector& z) {
  if (!w.square() || w.rows() != z.size()) throw DimensionError("quadratic form size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (z[j] != 0) s += z[i] * w(i, j) * z[j];
  }
  return s;
}

bool verify_negative_direction(const RationalMatrix& w, const RationalVector& z) {
  return quadratic_form(w, z) < 0;
}

PsdResult is_psd_exact(const RationalMatrix& w) {
  if (!w.square()) throw DimensionError("PSD test needs a square matrix");
  if (w.rows() > kMaxPsdDimension)
    throw BudgetError("exact PSD test is limited to " + std::to_string(kMaxPsdDimension) +
                      " rows");
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = i + 1; j < w.rows(); ++j)
      if (w(i, j) != w(j, i)) throw DimensionError("PSD test needs a symmetric matrix");
  PsdResult out;
  out.psd = all_principal_minors_nonnegative(w);
  auto z = ldl_witness(w);
  if (out.psd != !z.has_value())
    throw std::logic_error("principal minors and elimination disagree");
  if (z) out.witness = primitive_integer(std::move(*z));
  return out;
}

}  // namespace xeq
