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

#include "xeq/sdp.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

namespace xeq {
namespace {

using Scalar = long double;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

// Maximize f.z subject to G z <= h and F0 + sum_p z_p F_p >= 0 (PSD).
struct BarrierProblem {
  Mat g;
  Vec h;
  Mat f0;
  std::vector<Mat> f;
  Vec obj;
  Mat lmi(const Vec& z) const {
    Mat s = f0;
    for (std::size_t p = 0; p < f.size(); ++p) s += z(p) * f[p];
    return s;
  }
  Scalar nu() const { return static_cast<Scalar>(g.rows() + f0.rows()); }
};

// -sum log(slack) - log det S, or +inf outside the domain.
Scalar barrier_value(const BarrierProblem& bp, const Vec& z) {
  Vec slack = bp.h - bp.g * z;
  Scalar v = 0;
  for (Eigen::Index i = 0; i < slack.size(); ++i) {
    if (!(slack(i) > 0)) return kInf;
    v -= std::log(slack(i));
  }
  Eigen::LLT<Mat> llt(bp.lmi(z));
  if (llt.info() != Eigen::Success) return kInf;
  const Mat& l = llt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    if (!(l(i, i) > 0)) return kInf;
    v -= 2 * std::log(l(i, i));
  }
  return v;
}

struct BarrierOutcome {
  Vec z;
  bool ok = false;
  int steps = 0;
  Scalar gap = kInf;
  bool stalled = false;  // stopped early on an unusable Newton system
  std::string why;
};

BarrierOutcome barrier_maximize(const BarrierProblem& bp, Vec z, Scalar tol,
                                const std::function<bool(const Vec&)>& stop_early = {}) {
  BarrierOutcome out;
  const Eigen::Index q = z.size();
  const Scalar nu = bp.nu();
  Scalar t = 1;
  Vec last_center = z;
  if (!std::isfinite(barrier_value(bp, z))) {
    out.why = "start point is not strictly feasible";
    return out;
  }
  for (int outer = 0; outer < 60; ++outer) {
    for (int inner = 0; inner < 100; ++inner) {
      Vec slack = bp.h - bp.g * z;
      Mat sinv = Eigen::LLT<Mat>(bp.lmi(z)).solve(Mat::Identity(bp.f0.rows(), bp.f0.cols()));
      Vec grad = -t * bp.obj;
      Mat hess = Mat::Zero(q, q);
      if (bp.g.rows() > 0) {
        Vec inv = slack.cwiseInverse();
        grad += bp.g.transpose() * inv;
        hess += bp.g.transpose() * inv.cwiseAbs2().asDiagonal() * bp.g;
      }
      std::vector<Mat> sf(bp.f.size());
      for (std::size_t p = 0; p < bp.f.size(); ++p) {
        sf[p] = sinv * bp.f[p];
        grad(p) -= sf[p].trace();
      }
      for (std::size_t p = 0; p < bp.f.size(); ++p)
        for (std::size_t r = p; r < bp.f.size(); ++r) {
          const Scalar v = sf[p].cwiseProduct(sf[r].transpose()).sum();
          hess(p, r) += v;
          if (r != p) hess(r, p) += v;
        }
      // Jacobi scaling keeps the factorization usable near the boundary.
      Vec scale = hess.diagonal().cwiseMax(Scalar(1e-300L)).cwiseSqrt().cwiseInverse();
      Eigen::LDLT<Mat> ldlt(scale.asDiagonal() * hess * scale.asDiagonal());
      Vec step;
      if (ldlt.info() == Eigen::Success)
        step = scale.asDiagonal() * ldlt.solve(-(scale.asDiagonal() * grad));
      if (ldlt.info() != Eigen::Success || !step.allFinite()) {
        if (outer == 0) {
          out.why = "Newton system could not be factored";
          return out;
        }
        // Keep the last centered point; the caller judges its gap.
        out.stalled = true;
        out.z = std::move(last_center);
        out.ok = true;
        return out;
      }
      const Scalar decrement = -grad.dot(step);
      ++out.steps;
      if (decrement / 2 <= 1e-10L) break;
      // Backtracking on the barrier objective.
      const Scalar phi0 = -t * bp.obj.dot(z) + barrier_value(bp, z);
      Scalar alpha = 1;
      for (;;) {
        Vec cand = z + alpha * step;
        const Scalar b = barrier_value(bp, cand);
        if (std::isfinite(b) && -t * bp.obj.dot(cand) + b <= phi0 - 0.25L * alpha * decrement)
          break;
        alpha /= 2;
        if (alpha < 1e-30L) break;
      }
      if (alpha < 1e-30L) break;  // no further progress at this t
      z += alpha * step;
    }
    out.gap = nu / t;
    last_center = z;
    if (stop_early && stop_early(z)) break;
    if (out.gap < tol) break;
    t *= 10;
  }
  out.z = std::move(z);
  out.ok = true;
  return out;
}

// Symmetric matrix from a flat SymIndex vector.
template <typename V>
Mat unflatten(const V& v, std::size_t m) {
  Mat s(m, m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j, ++k) s(i, j) = s(j, i) = v(k);
  return s;
}

}  // namespace

SdpProblem::SdpProblem(std::size_t m, bool nonnegative) : m_(m) {
  const std::size_t n = num_vars();
  c_.assign(n, 0);
  std::vector<double> norm(n);
  SymIndex idx(m);
  for (std::size_t k = 0; k < n; ++k) {
    auto [i, j] = idx.entry(k);
    norm[k] = i == j ? 1 : 2;
  }
  eq_.push_back({std::move(norm), 1});
  if (nonnegative) {
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> row(n, 0);
      row[k] = -1;
      ineq_.push_back({std::move(row), 0});
    }
  }
}

SdpProblem SdpProblem::from_system(std::size_t m, const LinearSystem& sys, bool nonnegative) {
  SdpProblem p(m, nonnegative);
  if (sys.num_vars() != p.num_vars()) throw DimensionError("system is not over SymIndex variables");
  for (const auto& c : sys.inequalities()) p.add_inequality(to_real(c.coeffs), to_double(c.rhs));
  for (const auto& c : sys.equalities()) p.add_equality(to_real(c.coeffs), to_double(c.rhs));
  return p;
}

void SdpProblem::set_objective(std::vector<double> c) {
  if (c.size() != num_vars()) throw DimensionError("objective length mismatch");
  c_ = std::move(c);
}

void SdpProblem::set_objective_matrix(const RealMatrix& c) {
  if (c.rows() != m_ || c.cols() != m_) throw DimensionError("objective shape mismatch");
  SymIndex idx(m_);
  std::vector<double> flat(num_vars());
  for (std::size_t k = 0; k < flat.size(); ++k) {
    auto [i, j] = idx.entry(k);
    flat[k] = i == j ? c(i, i) : c(i, j) + c(j, i);
  }
  c_ = std::move(flat);
}

void SdpProblem::add_inequality(std::vector<double> coeffs, double rhs) {
  if (coeffs.size() != num_vars()) throw DimensionError("inequality length mismatch");
  ineq_.push_back({std::move(coeffs), rhs});
}

void SdpProblem::add_equality(std::vector<double> coeffs, double rhs) {
  if (coeffs.size() != num_vars()) throw DimensionError("equality length mismatch");
  eq_.push_back({std::move(coeffs), rhs});
}

const char* to_string(SdpStatus status) {
  switch (status) {
    case SdpStatus::kOptimal: return "optimal";
    case SdpStatus::kInfeasible: return "infeasible";
    case SdpStatus::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

SdpResult sdp_solve(const SdpProblem& problem, double tol) {
  const std::size_t m = problem.m();
  const std::size_t n = problem.num_vars();
  SdpResult result;

  const auto& eqs = problem.equalities();
  Mat e(eqs.size(), n);
  Vec d(eqs.size());
  for (std::size_t l = 0; l < eqs.size(); ++l) {
    for (std::size_t k = 0; k < n; ++k) e(l, k) = eqs[l].coeffs[k];
    d(l) = eqs[l].rhs;
  }
  Eigen::JacobiSVD<Mat> svd(e, Eigen::ComputeFullV | Eigen::ComputeThinU);
  const Scalar smax = svd.singularValues().size() ? svd.singularValues()(0) : 0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-12L * std::max<Scalar>(1, smax)) ++rank;
  svd.setThreshold(1e-12L);
  Vec wp = svd.solve(d);
  if ((e * wp - d).cwiseAbs().maxCoeff() > 1e-9L) {
    result.status = SdpStatus::kInfeasible;
    result.diagnostics = "equality constraints are inconsistent";
    return result;
  }
  const Eigen::Index r = static_cast<Eigen::Index>(n) - rank;
  Mat nbasis = svd.matrixV().rightCols(r);

  const auto& ineqs = problem.inequalities();
  std::vector<Vec> grows;
  std::vector<Scalar> hvals;
  for (const auto& c : ineqs) {
    Vec a(n);
    for (std::size_t k = 0; k < n; ++k) a(k) = c.coeffs[k];
    Vec row = nbasis.transpose() * a;
    Scalar rhs = c.rhs - a.dot(wp);
    const Scalar norm = row.norm();
    if (norm < 1e-13L) {
      if (rhs < -1e-9L) {
        result.status = SdpStatus::kInfeasible;
        result.diagnostics = "an inequality is violated on the whole equality plane";
        return result;
      }
      continue;
    }
    grows.push_back(row / norm);
    hvals.push_back(rhs / norm);
  }

  BarrierProblem bp;
  bp.g.resize(grows.size(), r);
  bp.h.resize(grows.size());
  for (std::size_t i = 0; i < grows.size(); ++i) {
    bp.g.row(i) = grows[i].transpose();
    bp.h(i) = hvals[i];
  }
  bp.f0 = unflatten(wp, m);
  for (Eigen::Index p = 0; p < r; ++p) bp.f.push_back(unflatten(nbasis.col(p), m));
  Vec c(n);
  for (std::size_t k = 0; k < n; ++k) c(k) = problem.objective()[k];
  bp.obj = nbasis.transpose() * c;

  auto finish = [&](const Vec& z, Scalar delta) {
    Vec w = wp + nbasis * z;
    result.flat.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) result.flat[k] = static_cast<double>(w(k));
    Mat wm = unflatten(w, m);
    result.w = RealMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) result.w(i, j) = static_cast<double>(wm(i, j));
    result.value = static_cast<double>(c.dot(w));
    Scalar viol = 0;
    for (const auto& row : ineqs) {
      Scalar s = -row.rhs;
      for (std::size_t k = 0; k < n; ++k) s += row.coeffs[k] * w(k);
      viol = std::max(viol, s);
    }
    viol = std::max(viol, (e * w - d).cwiseAbs().maxCoeff());
    result.max_violation = static_cast<double>(viol);
    Eigen::SelfAdjointEigenSolver<Mat> eig(wm);
    result.min_eigenvalue = static_cast<double>(eig.eigenvalues()(0));
    result.relaxation = static_cast<double>(delta);
  };

  if (r == 0) {
    finish(Vec::Zero(0), 0);
    const bool ok = result.max_violation <= 1e-9 && result.min_eigenvalue >= -1e-9;
    result.status = ok ? SdpStatus::kOptimal : SdpStatus::kInfeasible;
    result.gap = 0;
    return result;
  }

  // Start from a point near the uniform matrix, projected onto the plane.
  constexpr Scalar kEps = 1e-2L;
  Vec w0(n);
  {
    std::size_t k = 0;
    const Scalar mm = static_cast<Scalar>(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j, ++k)
        w0(k) = (1 - kEps) / (mm * mm) + (i == j ? kEps / mm : 0);
  }
  Vec z = nbasis.transpose() * (w0 - wp);
  Scalar delta = 0;

  if (!std::isfinite(barrier_value(bp, z))) {
    // Phase 1: minimize s with G z - s <= h, S(z) + s I >= 0, s >= -1.
    BarrierProblem p1;
    const Eigen::Index rows = bp.g.rows();
    p1.g = Mat::Zero(rows + 1, r + 1);
    p1.h = Vec::Zero(rows + 1);
    p1.g.topLeftCorner(rows, r) = bp.g;
    p1.g.block(0, r, rows, 1).setConstant(-1);
    p1.h.head(rows) = bp.h;
    p1.g(rows, r) = -1;
    p1.h(rows) = 1;
    p1.f0 = bp.f0;
    p1.f = bp.f;
    p1.f.push_back(Mat::Identity(m, m));
    p1.obj = Vec::Zero(r + 1);
    p1.obj(r) = -1;
    Scalar s0 = 0;
    if (rows > 0) s0 = (bp.g * z - bp.h).maxCoeff();
    Eigen::SelfAdjointEigenSolver<Mat> eig(bp.lmi(z));
    s0 = std::max(s0, -eig.eigenvalues()(0));
    Vec z1(r + 1);
    z1.head(r) = z;
    z1(r) = std::max<Scalar>(s0, 0) + 1;
    auto p1_out = barrier_maximize(p1, z1, 1e-11L,
                                   [r](const Vec& v) { return v(r) < -1e-3L; });
    result.newton_steps += p1_out.steps;
    if (!p1_out.ok) {
      result.status = SdpStatus::kNumericalFailure;
      result.diagnostics = "phase 1: " + p1_out.why;
      return result;
    }
    const Scalar s_star = p1_out.z(r);
    z = p1_out.z.head(r);
    if (s_star > 1e-6L) {
      result.status = SdpStatus::kInfeasible;
      result.diagnostics = "phase 1 optimum " + std::to_string(static_cast<double>(s_star)) +
                           " > 0";
      return result;
    }
    if (s_star > -1e-9L) {
      // Feasible set without interior: loosen just enough to get one.
      delta = std::max<Scalar>(s_star, 0) + 1e-9L;
      bp.h.array() += delta;
      bp.f0 += delta * Mat::Identity(m, m);
      result.diagnostics = "feasible set has empty interior; relaxed";
    }
  }

  auto out = barrier_maximize(bp, z, tol);
  result.newton_steps += out.steps;
  if (!out.ok) {
    result.status = SdpStatus::kNumericalFailure;
    result.diagnostics = out.why;
    return result;
  }
  if (out.stalled && out.gap > 1e-5L) {
    result.status = SdpStatus::kNumericalFailure;
    result.diagnostics = "Newton system became singular with gap " +
                         std::to_string(static_cast<double>(out.gap));
    return result;
  }
  finish(out.z, delta);
  result.gap = static_cast<double>(out.gap);
  result.status = SdpStatus::kOptimal;
  if (out.stalled) {
    if (!result.diagnostics.empty()) result.diagnostics += "; ";
    result.diagnostics += "stopped at gap " + std::to_string(result.gap);
  }
  return result;
}

}  // namespace xeq
