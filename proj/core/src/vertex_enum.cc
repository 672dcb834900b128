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

#include "xeq/vertex_enum.h"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "xeq/linalg.h"
#include "xeq/lp.h"

namespace xeq {
namespace {

struct Ray {
  RationalVector x;
  std::vector<bool> tight;  // over all homogenized rows
};

// Positive rescaling to coprime integers; direction is preserved.
void normalize_ray(RationalVector& r) {
  mpz_class lcm_den = 1, g = 0;
  for (const auto& x : r) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : r) {
    x *= lcm_den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : r) x /= g;
}

Rational row_dot(const RationalMatrix& h, std::size_t row, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (h(row, j) != 0 && x[j] != 0) s += h(row, j) * x[j];
  return s;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

}  // namespace

std::vector<RationalVector> enumerate_vertices(const LinearSystem& system) {
  const std::size_t n = system.num_vars();
  const auto& ineq = system.inequalities();
  const auto& eq = system.equalities();

  // v = p + N t parametrizes the affine hull of the equalities.
  RationalVector p(n, Rational(0));
  std::vector<RationalVector> basis;
  if (!eq.empty()) {
    RationalMatrix e(eq.size(), n);
    RationalVector d(eq.size());
    for (std::size_t l = 0; l < eq.size(); ++l) {
      for (std::size_t j = 0; j < n; ++j) e(l, j) = eq[l].coeffs[j];
      d[l] = eq[l].rhs;
    }
    auto sol = solve_affine(e, d);
    if (!sol) return {};
    p = std::move(sol->particular);
    basis = std::move(sol->basis);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      RationalVector b(n, Rational(0));
      b[j] = 1;
      basis.push_back(std::move(b));
    }
  }
  const std::size_t dim = basis.size();
  auto lift = [&](const RationalVector& t) {
    RationalVector v = p;
    for (std::size_t k = 0; k < dim; ++k)
      if (t[k] != 0)
        for (std::size_t j = 0; j < n; ++j) v[j] += t[k] * basis[k][j];
    return v;
  };

  if (dim == 0) {
    if (system.satisfied_by(p)) return {p};
    return {};
  }

  // Homogenized rows h.(t, tau) <= 0; the last row is -tau <= 0.
  const std::size_t dh = dim + 1;
  const std::size_t num_rows = ineq.size() + 1;
  RationalMatrix h(num_rows, dh);
  for (std::size_t i = 0; i < ineq.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) h(i, k) = dot(ineq[i].coeffs, basis[k]);
    h(i, dim) = dot(ineq[i].coeffs, p) - ineq[i].rhs;
  }
  h(ineq.size(), dim) = -1;

  // Initial simplicial cone from dh independent rows.
  std::vector<std::size_t> chosen;
  {
    std::vector<RationalVector> rows_so_far;
    for (std::size_t i = num_rows; i-- > 0 && chosen.size() < dh;) {
      rows_so_far.push_back(h.row(i));
      RationalMatrix trial(rows_so_far.size(), dh);
      for (std::size_t r = 0; r < rows_so_far.size(); ++r)
        for (std::size_t c = 0; c < dh; ++c) trial(r, c) = rows_so_far[r][c];
      if (rank(trial) == rows_so_far.size())
        chosen.push_back(i);
      else
        rows_so_far.pop_back();
    }
  }
  if (chosen.size() < dh) {
    // The cone has a lineality space, so a nonempty polyhedron is unbounded.
    if (lp_feasible(system).status == LpStatus::kInfeasible) return {};
    throw UnboundedPolyhedronError("polyhedron contains a line");
  }

  std::vector<bool> processed(num_rows, false);
  std::vector<Ray> rays;
  {
    RationalMatrix aug(dh, 2 * dh);
    for (std::size_t r = 0; r < dh; ++r) {
      for (std::size_t c = 0; c < dh; ++c) aug(r, c) = h(chosen[r], c);
      aug(r, dh + r) = 1;
    }
    RowEchelon e = rref(std::move(aug));
    for (std::size_t j = 0; j < dh; ++j) {
      Ray ray;
      ray.x.resize(dh);
      for (std::size_t r = 0; r < dh; ++r) ray.x[r] = -e.reduced(r, dh + j);
      normalize_ray(ray.x);
      rays.push_back(std::move(ray));
    }
    for (std::size_t i : chosen) processed[i] = true;
  }
  auto compute_tight = [&](Ray& ray) {
    ray.tight.assign(num_rows, false);
    for (std::size_t i = 0; i < num_rows; ++i) ray.tight[i] = row_dot(h, i, ray.x) == 0;
  };
  for (auto& ray : rays) compute_tight(ray);

  for (std::size_t i = 0; i < num_rows; ++i) {
    if (processed[i]) continue;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = row_dot(h, i, rays[r].x);
      if (val[r] > 0) plus.push_back(r);
      else if (val[r] < 0) minus.push_back(r);
    }
    processed[i] = true;
    if (plus.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] <= 0) next.push_back(rays[r]);
    for (std::size_t a : plus) {
      for (std::size_t b : minus) {
        std::vector<std::size_t> common;
        for (std::size_t k = 0; k < num_rows; ++k)
          if (processed[k] && k != i && rays[a].tight[k] && rays[b].tight[k]) common.push_back(k);
        if (common.size() + 2 < dh) continue;
        RationalMatrix sub(common.size(), dh);
        for (std::size_t r = 0; r < common.size(); ++r)
          for (std::size_t c = 0; c < dh; ++c) sub(r, c) = h(common[r], c);
        if (rank(sub) != dh - 2) continue;
        Ray ray;
        ray.x.resize(dh);
        for (std::size_t c = 0; c < dh; ++c)
          ray.x[c] = val[a] * rays[b].x[c] - val[b] * rays[a].x[c];
        normalize_ray(ray.x);
        compute_tight(ray);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<RationalVector> vertices;
  bool recession = false;
  for (const auto& ray : rays) {
    const Rational& tau = ray.x[dim];
    if (tau == 0) {
      recession = true;
      continue;
    }
    RationalVector t(dim);
    for (std::size_t k = 0; k < dim; ++k) t[k] = ray.x[k] / tau;
    vertices.push_back(lift(t));
  }
  if (recession && !vertices.empty())
    throw UnboundedPolyhedronError("polyhedron has a recession direction");
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace xeq
