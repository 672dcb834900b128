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

#include "xeq/lp.h"

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace xeq {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Standard form  A x = b, x >= 0, b >= 0, built from a LinearSystem.
//
// Inequalities of the shape  -c * v_j <= 0  (c > 0) are absorbed as sign
// constraints on v_j; every other variable is split into v+ - v-.
struct StandardForm {
  std::size_t num_vars = 0;
  std::vector<std::size_t> pos_col;   // per variable
  std::vector<std::size_t> neg_col;   // per variable, kNone if nonnegative
  std::vector<std::size_t> bound_row_var;  // per inequality: var if absorbed
  std::vector<std::size_t> row_source;     // per row: inequality k or
                                           // ineq.size() + equality l
  std::vector<int> row_sign;
  std::size_t num_structural = 0;  // columns before slacks
  std::size_t num_real = 0;        // structural + slack columns
  std::size_t num_cols = 0;        // real + artificial
  std::vector<std::size_t> init_col;  // per row: identity column at start
  std::vector<bool> artificial;       // per column
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), t_(rows, RationalVector(cols + 1, Rational(0))),
        obj_(cols + 1, Rational(0)), basis_(rows, kNone) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return t_[r][cols_]; }
  const Rational& rhs(std::size_t r) const { return t_[r][cols_]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t basis(std::size_t r) const { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set_costs(const RationalVector& costs) {
    costs_ = costs;
    for (std::size_t j = 0; j < cols_; ++j) obj_[j] = costs[j];
    obj_[cols_] = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& cb = costs_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_[r][j] != 0) obj_[j] -= cb * t_[r][j];
    }
  }

  Rational objective_value() const { return -obj_[cols_]; }
  const Rational& reduced_cost(std::size_t j) const { return obj_[j]; }
  const Rational& cost(std::size_t j) const { return costs_[j]; }

  void pivot(std::size_t r, std::size_t e) {
    RationalVector& prow = t_[r];
    const Rational inv = 1 / prow[e];
    for (std::size_t j = 0; j <= cols_; ++j)
      if (prow[j] != 0) prow[j] *= inv;
    Rational f;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_[i][e] == 0) continue;
      f = t_[i][e];
      RationalVector& row = t_[i];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (prow[j] != 0) row[j] -= f * prow[j];
    }
    if (obj_[e] != 0) {
      f = obj_[e];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (prow[j] != 0) obj_[j] -= f * prow[j];
    }
    basis_[r] = e;
  }

  enum class Outcome { kOptimal, kUnbounded };

  // Maximizes the current costs with Bland's rule over allowed columns.
  Outcome run(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t e = kNone;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (allowed[j] && obj_[j] > 0) {
          e = j;
          break;
        }
      }
      if (e == kNone) return Outcome::kOptimal;
      std::size_t leave = kNone;
      Rational best_ratio, ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_[i][e] <= 0) continue;
        ratio = t_[i][cols_] / t_[i][e];
        if (leave == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == kNone) return Outcome::kUnbounded;
      pivot(leave, e);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<RationalVector> t_;
  RationalVector obj_;
  RationalVector costs_;
  std::vector<std::size_t> basis_;
};

StandardForm build_standard_form(const LinearSystem& sys) {
  StandardForm sf;
  const auto& ineq = sys.inequalities();
  const auto& eq = sys.equalities();
  sf.num_vars = sys.num_vars();
  std::vector<bool> nonneg(sf.num_vars, false);
  sf.bound_row_var.assign(ineq.size(), kNone);
  for (std::size_t k = 0; k < ineq.size(); ++k) {
    if (ineq[k].rhs != 0) continue;
    std::size_t var = kNone;
    bool single = true;
    for (std::size_t j = 0; j < sf.num_vars; ++j) {
      if (ineq[k].coeffs[j] == 0) continue;
      if (var != kNone) { single = false; break; }
      var = j;
    }
    if (single && var != kNone && ineq[k].coeffs[var] < 0) {
      nonneg[var] = true;
      sf.bound_row_var[k] = var;
    }
  }
  std::size_t col = 0;
  sf.pos_col.resize(sf.num_vars);
  sf.neg_col.assign(sf.num_vars, kNone);
  for (std::size_t j = 0; j < sf.num_vars; ++j) {
    sf.pos_col[j] = col++;
    if (!nonneg[j]) sf.neg_col[j] = col++;
  }
  sf.num_structural = col;
  for (std::size_t k = 0; k < ineq.size(); ++k)
    if (sf.bound_row_var[k] == kNone) sf.row_source.push_back(k);
  const std::size_t num_ineq_rows = sf.row_source.size();
  for (std::size_t l = 0; l < eq.size(); ++l) sf.row_source.push_back(ineq.size() + l);
  sf.num_real = sf.num_structural + num_ineq_rows;
  return sf;
}

}  // namespace

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

bool verify_farkas(const LinearSystem& system, const FarkasCertificate& cert) {
  const auto& ineq = system.inequalities();
  const auto& eq = system.equalities();
  if (cert.inequality_multipliers.size() != ineq.size() ||
      cert.equality_multipliers.size() != eq.size())
    return false;
  RationalVector combo(system.num_vars(), Rational(0));
  Rational rhs = 0;
  for (std::size_t k = 0; k < ineq.size(); ++k) {
    const Rational& y = cert.inequality_multipliers[k];
    if (y < 0) return false;
    if (y == 0) continue;
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y * ineq[k].coeffs[j];
    rhs += y * ineq[k].rhs;
  }
  for (std::size_t l = 0; l < eq.size(); ++l) {
    const Rational& z = cert.equality_multipliers[l];
    if (z == 0) continue;
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += z * eq[l].coeffs[j];
    rhs += z * eq[l].rhs;
  }
  for (const auto& c : combo)
    if (c != 0) return false;
  return rhs == -1;
}

LpResult lp_solve(const LinearSystem& system, const RationalVector& objective,
                  Sense sense) {
  if (objective.size() != system.num_vars())
    throw DimensionError("objective length mismatch");
  const auto& ineq = system.inequalities();
  const auto& eq = system.equalities();
  StandardForm sf = build_standard_form(system);
  const std::size_t rows = sf.row_source.size();
  const std::size_t num_ineq_rows = sf.num_real - sf.num_structural;

  // Decide which rows need an artificial column.
  std::vector<const LinearConstraint*> src(rows);
  sf.row_sign.assign(rows, 1);
  std::size_t num_art = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t s = sf.row_source[r];
    src[r] = s < ineq.size() ? &ineq[s] : &eq[s - ineq.size()];
    if (src[r]->rhs < 0) sf.row_sign[r] = -1;
    if (!(r < num_ineq_rows && sf.row_sign[r] > 0)) ++num_art;
  }
  sf.num_cols = sf.num_real + num_art;
  sf.artificial.assign(sf.num_cols, false);
  sf.init_col.assign(rows, kNone);

  Tableau tab(rows, sf.num_cols);
  std::size_t next_art = sf.num_real;
  for (std::size_t r = 0; r < rows; ++r) {
    const int sign = sf.row_sign[r];
    for (std::size_t j = 0; j < sf.num_vars; ++j) {
      const Rational& a = src[r]->coeffs[j];
      if (a == 0) continue;
      tab.at(r, sf.pos_col[j]) = sign * a;
      if (sf.neg_col[j] != kNone) tab.at(r, sf.neg_col[j]) = -sign * a;
    }
    tab.rhs(r) = sign * src[r]->rhs;
    if (r < num_ineq_rows) tab.at(r, sf.num_structural + r) = sign;
    if (r < num_ineq_rows && sign > 0) {
      sf.init_col[r] = sf.num_structural + r;
    } else {
      tab.at(r, next_art) = 1;
      sf.artificial[next_art] = true;
      sf.init_col[r] = next_art++;
    }
    tab.basis(r) = sf.init_col[r];
  }

  LpResult result;
  if (num_art > 0) {
    RationalVector costs(sf.num_cols, Rational(0));
    for (std::size_t j = sf.num_real; j < sf.num_cols; ++j) costs[j] = -1;
    tab.set_costs(costs);
    std::vector<bool> allowed(sf.num_cols, true);
    tab.run(allowed);  // bounded above by zero
    if (tab.objective_value() < 0) {
      // y = c_B^T B^{-1}; columns of B^{-1} sit at the initial basis columns.
      RationalVector y(rows, Rational(0));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t i = 0; i < rows; ++i) {
          const Rational& cb = tab.cost(tab.basis(i));
          if (cb != 0) y[r] += cb * tab.at(i, sf.init_col[r]);
        }
      const Rational scale = -1 / tab.objective_value();
      FarkasCertificate cert;
      cert.inequality_multipliers.assign(ineq.size(), Rational(0));
      cert.equality_multipliers.assign(eq.size(), Rational(0));
      RationalVector column_sum(sf.num_vars, Rational(0));
      for (std::size_t r = 0; r < rows; ++r) {
        Rational mu = sf.row_sign[r] * y[r] * scale;
        for (std::size_t j = 0; j < sf.num_vars; ++j)
          if (src[r]->coeffs[j] != 0) column_sum[j] += mu * src[r]->coeffs[j];
        const std::size_t s = sf.row_source[r];
        if (s < ineq.size())
          cert.inequality_multipliers[s] = mu;
        else
          cert.equality_multipliers[s - ineq.size()] = mu;
      }
      // Absorbed sign rows take up whatever the other rows leave on v_j.
      std::vector<bool> used(sf.num_vars, false);
      for (std::size_t k = 0; k < ineq.size(); ++k) {
        const std::size_t var = sf.bound_row_var[k];
        if (var == kNone || used[var]) continue;
        used[var] = true;
        cert.inequality_multipliers[k] = column_sum[var] / -ineq[k].coeffs[var];
      }
      result.status = LpStatus::kInfeasible;
      result.certificate = std::move(cert);
      return result;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (std::size_t r = 0; r < rows; ++r) {
      if (!sf.artificial[tab.basis(r)]) continue;
      for (std::size_t j = 0; j < sf.num_real; ++j) {
        if (tab.at(r, j) != 0) {
          tab.pivot(r, j);
          break;
        }
      }
    }
  }

  RationalVector costs(sf.num_cols, Rational(0));
  for (std::size_t j = 0; j < sf.num_vars; ++j) {
    Rational c = sense == Sense::kMaximize ? objective[j] : Rational(-objective[j]);
    costs[sf.pos_col[j]] = c;
    if (sf.neg_col[j] != kNone) costs[sf.neg_col[j]] = -c;
  }
  tab.set_costs(costs);
  std::vector<bool> allowed(sf.num_cols, true);
  for (std::size_t j = sf.num_real; j < sf.num_cols; ++j) allowed[j] = false;
  if (tab.run(allowed) == Tableau::Outcome::kUnbounded) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  RationalVector x(sf.num_cols, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) x[tab.basis(r)] = tab.rhs(r);
  result.point.assign(sf.num_vars, Rational(0));
  for (std::size_t j = 0; j < sf.num_vars; ++j) {
    result.point[j] = x[sf.pos_col[j]];
    if (sf.neg_col[j] != kNone) result.point[j] -= x[sf.neg_col[j]];
  }
  result.status = LpStatus::kOptimal;
  result.optimum = dot(objective, result.point);
  return result;
}

LpResult lp_feasible(const LinearSystem& system) {
  return lp_solve(system, RationalVector(system.num_vars(), Rational(0)),
                  Sense::kMaximize);
}

}  // namespace xeq
