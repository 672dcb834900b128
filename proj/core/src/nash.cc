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

#include "xeq/nash.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "xeq/linalg.h"
#include "xeq/linear_system.h"
#include "xeq/vertex_enum.h"

namespace xeq {
namespace {

Support support_of(unsigned mask, std::size_t m) {
  Support s;
  for (std::size_t i = 0; i < m; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

RationalVector payoff_against(const SymmetricGame& game, const RationalVector& y) {
  return multiply(game.payoff(), y);
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& p, const Rational& q) { return p < q; });
}

// Points y with support inside `played` that make every strategy in `best`
// a best response: (A y)_i = w for i in best, (A y)_j <= w otherwise.
// Returns the vertices of that polytope (in y only).
std::vector<RationalVector> response_polytope(const SymmetricGame& game,
                                              unsigned played, unsigned best) {
  const std::size_t m = game.num_strategies();
  const std::size_t w = m;  // index of the level variable
  LinearSystem sys(m + 1);
  for (std::size_t j = 0; j < m; ++j) {
    RationalVector e(m + 1, Rational(0));
    e[j] = 1;
    if (played & (1u << j)) {
      e[j] = -1;
      sys.add_inequality(std::move(e), 0);
    } else {
      sys.add_equality(std::move(e), 0);
    }
  }
  RationalVector norm(m + 1, Rational(1));
  norm[w] = 0;
  sys.add_equality(std::move(norm), 1);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(m + 1);
    for (std::size_t j = 0; j < m; ++j) row[j] = game.utility(i, j);
    row[w] = -1;
    if (best & (1u << i))
      sys.add_equality(std::move(row), 0);
    else
      sys.add_inequality(std::move(row), 0);
  }

  // Fast path: the equalities alone determine the point.
  RationalMatrix e(sys.equalities().size(), m + 1);
  RationalVector d(sys.equalities().size());
  for (std::size_t l = 0; l < sys.equalities().size(); ++l) {
    for (std::size_t j = 0; j <= m; ++j) e(l, j) = sys.equalities()[l].coeffs[j];
    d[l] = sys.equalities()[l].rhs;
  }
  auto sol = solve_affine(e, d);
  if (!sol) return {};
  std::vector<RationalVector> points;
  if (sol->unique()) {
    if (sys.satisfied_by(sol->particular)) points.push_back(sol->particular);
  } else {
    points = enumerate_vertices(sys);
  }
  for (auto& p : points) p.pop_back();
  return points;
}

bool has_tie(const SymmetricGame& game, const RationalVector& x, const RationalVector& y) {
  RationalVector ay = payoff_against(game, y);
  Rational best = *std::max_element(ay.begin(), ay.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] == 0 && ay[i] == best) return true;
  return false;
}

void check_size(const SymmetricGame& game) {
  if (game.num_strategies() > kMaxNashStrategies)
    throw BudgetError("support enumeration is limited to " +
                      std::to_string(kMaxNashStrategies) + " strategies");
}

auto strategy_key(const MixedStrategy& s) {
  Support sup = s.support();
  return std::make_pair(sup.size(), sup);
}

}  // namespace

bool is_nash(const SymmetricGame& game, const MixedStrategy& x,
             const MixedStrategy& y) {
  const std::size_t m = game.num_strategies();
  if (x.size() != m || y.size() != m) throw DimensionError("strategy length mismatch");
  // Column player's payoff for column j against x is (A x)_j.
  for (const auto& [me, other] : {std::pair{&x, &y}, std::pair{&y, &x}}) {
    RationalVector u = payoff_against(game, other->probabilities());
    Rational best = *std::max_element(u.begin(), u.end());
    for (std::size_t i = 0; i < m; ++i)
      if ((*me)[i] != 0 && u[i] != best) return false;
  }
  return true;
}

bool is_symmetric_nash(const SymmetricGame& game, const MixedStrategy& x) {
  return is_nash(game, x, x);
}

SymmetricNashEnumeration enumerate_symmetric_nash(const SymmetricGame& game) {
  check_size(game);
  const std::size_t m = game.num_strategies();
  SymmetricNashEnumeration out;
  std::vector<RationalVector> found;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    auto verts = response_polytope(game, mask, mask);
    if (verts.size() >= 2) {
      out.degenerate = true;
      out.degenerate_supports.push_back(support_of(mask, m));
    }
    for (auto& v : verts) found.push_back(std::move(v));
  }
  std::sort(found.begin(), found.end(), lex_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto& v : found) out.strategies.emplace_back(std::move(v));
  std::stable_sort(out.strategies.begin(), out.strategies.end(),
                   [](const MixedStrategy& a, const MixedStrategy& b) {
                     auto ka = strategy_key(a), kb = strategy_key(b);
                     if (ka != kb) return ka < kb;
                     return lex_less(a.probabilities(), b.probabilities());
                   });
  for (const auto& s : out.strategies)
    out.ties.push_back(has_tie(game, s.probabilities(), s.probabilities()));
  return out;
}

NashEnumeration enumerate_nash(const SymmetricGame& game) {
  check_size(game);
  const std::size_t m = game.num_strategies();
  NashEnumeration out;
  std::vector<std::pair<RationalVector, RationalVector>> found;
  for (unsigned s = 1; s < (1u << m); ++s) {
    for (unsigned t = 1; t < (1u << m); ++t) {
      // x lives on S and makes T best for the column player; y vice versa.
      auto xs = response_polytope(game, s, t);
      if (xs.empty()) continue;
      auto ys = response_polytope(game, t, s);
      if (ys.empty()) continue;
      if (xs.size() * ys.size() >= 2) {
        out.degenerate = true;
        out.degenerate_supports.emplace_back(support_of(s, m), support_of(t, m));
      }
      for (const auto& x : xs)
        for (const auto& y : ys) found.emplace_back(x, y);
    }
  }
  auto pair_less = [](const auto& a, const auto& b) {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return lex_less(a.second, b.second);
  };
  std::sort(found.begin(), found.end(), pair_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (auto& [x, y] : found) {
    NashPoint p{MixedStrategy(x), MixedStrategy(y), x == y, false};
    p.tie = has_tie(game, x, y) || has_tie(game, y, x);
    out.points.push_back(std::move(p));
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const NashPoint& a, const NashPoint& b) {
                     auto ka = std::make_tuple(a.x.support().size() + a.y.support().size(),
                                               a.x.support(), a.y.support());
                     auto kb = std::make_tuple(b.x.support().size() + b.y.support().size(),
                                               b.x.support(), b.y.support());
                     if (ka != kb) return ka < kb;
                     if (a.x != b.x) return lex_less(a.x.probabilities(), b.x.probabilities());
                     return lex_less(a.y.probabilities(), b.y.probabilities());
                   });
  return out;
}

JointDistribution rational_exchangeable_point(const SymmetricGame& game) {
  auto sym = enumerate_symmetric_nash(game);
  // Support enumeration always reaches a vertex of some equilibrium polytope.
  if (sym.strategies.empty())
    throw std::logic_error("no symmetric equilibrium found");
  return outer(sym.strategies.front());
}

}  // namespace xeq
