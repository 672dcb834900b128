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

#include "xeq/linear_system.h"

#include <stdexcept>
#include <utility>

namespace xeq {

void LinearSystem::add_inequality(RationalVector coeffs, Rational rhs) {
  if (coeffs.size() != num_vars_) throw DimensionError("inequality length mismatch");
  ineq_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_equality(RationalVector coeffs, Rational rhs) {
  if (coeffs.size() != num_vars_) throw DimensionError("equality length mismatch");
  eq_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::add_nonnegativity() {
  for (std::size_t i = 0; i < num_vars_; ++i) {
    RationalVector a(num_vars_, Rational(0));
    a[i] = -1;
    add_inequality(std::move(a), 0);
  }
}

bool LinearSystem::satisfied_by(const RationalVector& point) const {
  return !first_violation(point);
}

std::optional<std::size_t> LinearSystem::first_violation(
    const RationalVector& point) const {
  if (point.size() != num_vars_) throw DimensionError("point length mismatch");
  for (std::size_t k = 0; k < ineq_.size(); ++k)
    if (dot(ineq_[k].coeffs, point) > ineq_[k].rhs) return k;
  for (std::size_t k = 0; k < eq_.size(); ++k)
    if (dot(eq_[k].coeffs, point) != eq_[k].rhs) return ineq_.size() + k;
  return std::nullopt;
}

std::size_t SymIndex::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= m_) throw std::out_of_range("SymIndex: index out of range");
  // Entries before row i: m + (m-1) + ... + (m-i+1).
  return i * m_ - i * (i - 1) / 2 + (j - i);
}

std::pair<std::size_t, std::size_t> SymIndex::entry(std::size_t k) const {
  if (k >= size()) throw std::out_of_range("SymIndex: flat index out of range");
  std::size_t i = 0;
  while (k >= m_ - i) {
    k -= m_ - i;
    ++i;
  }
  return {i, i + k};
}

RationalVector SymIndex::flatten(const RationalMatrix& symmetric) const {
  if (symmetric.rows() != m_ || symmetric.cols() != m_)
    throw DimensionError("SymIndex::flatten: wrong shape");
  RationalVector out(size());
  for (std::size_t k = 0; k < size(); ++k) {
    auto [i, j] = entry(k);
    out[k] = symmetric(i, j);
  }
  return out;
}

RationalMatrix SymIndex::expand(const RationalVector& flat) const {
  if (flat.size() != size()) throw DimensionError("SymIndex::expand: wrong length");
  RationalMatrix out(m_, m_);
  for (std::size_t k = 0; k < size(); ++k) {
    auto [i, j] = entry(k);
    out(i, j) = flat[k];
    out(j, i) = flat[k];
  }
  return out;
}

std::pair<std::size_t, std::size_t> ce_deviation_pair(std::size_t m,
                                                      std::size_t k) {
  if (m < 2 || k >= m * (m - 1)) throw std::out_of_range("deviation pair index");
  const std::size_t s = k / (m - 1);
  std::size_t t = k % (m - 1);
  if (t >= s) ++t;
  return {s, t};
}

LinearSystem ce_system(const SymmetricGame& game, bool symmetric_only) {
  const std::size_t m = game.num_strategies();
  if (symmetric_only) {
    SymIndex idx(m);
    LinearSystem sys(idx.size());
    for (std::size_t k = 0; k < m * (m - 1); ++k) {
      auto [s, t] = ce_deviation_pair(m, k);
      RationalVector a(idx.size(), Rational(0));
      for (std::size_t j = 0; j < m; ++j)
        a[idx.index(s, j)] += game.utility(t, j) - game.utility(s, j);
      sys.add_inequality(std::move(a), 0);
    }
    sys.add_nonnegativity();
    RationalVector norm(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto [i, j] = idx.entry(k);
      norm[k] = i == j ? 1 : 2;
    }
    sys.add_equality(std::move(norm), 1);
    return sys;
  }

  LinearSystem sys(m * m);
  for (std::size_t k = 0; k < m * (m - 1); ++k) {
    auto [s, t] = ce_deviation_pair(m, k);
    RationalVector a(m * m, Rational(0));
    for (std::size_t j = 0; j < m; ++j)
      a[s * m + j] = game.utility(t, j) - game.utility(s, j);
    sys.add_inequality(std::move(a), 0);
  }
  // Column player: payoff B[i][j] = A[j][i].
  for (std::size_t k = 0; k < m * (m - 1); ++k) {
    auto [s, t] = ce_deviation_pair(m, k);
    RationalVector a(m * m, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      a[i * m + s] = game.utility(t, i) - game.utility(s, i);
    sys.add_inequality(std::move(a), 0);
  }
  sys.add_nonnegativity();
  sys.add_equality(RationalVector(m * m, Rational(1)), 1);
  return sys;
}

RationalVector symmetric_functional(const RationalMatrix& c) {
  if (!c.square()) throw DimensionError("functional must be square");
  SymIndex idx(c.rows());
  RationalVector out(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    auto [i, j] = idx.entry(k);
    out[k] = i == j ? Rational(c(i, i)) : Rational(c(i, j) + c(j, i));
  }
  return out;
}

}  // namespace xeq
