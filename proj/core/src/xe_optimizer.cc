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


#include "xeq/xe_optimizer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "xeq/nash.h"
#include "xeq/psd.h"
#include "xeq/vertex_enum.h"

namespace xeq {
namespace {

Rational functional_value(const RationalMatrix& c, const RationalMatrix& w) {
  Rational v = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) v += c(i, j) * w(i, j);
  return v;
}

Rational functional_value(const RationalMatrix& c, const MixedStrategy& x) {
  Rational v = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) v += c(i, j) * x[i] * x[j];
  return v;
}

// Symmetric, nonnegative, PSD and incentive compatible; exact.
bool exact_dnn_ce(const SymmetricGame& game, const JointDistribution& w) {
  return w.is_symmetric() && !find_ce_violation(game, w) && is_psd_exact(w.matrix()).psd;
}

// Turns implicit equalities of the system into explicit ones. A diagonal
// entry forced to zero forces its whole row to zero on the PSD cone, which
// may expose further implicit equalities.
LinearSystem facial_reduction(const LinearSystem& sys, std::size_t m, std::string* note) {
  SymIndex idx(m);
  const std::size_t n = idx.size();
  std::vector<LinearConstraint> ineq = sys.inequalities();
  std::vector<LinearConstraint> eq = sys.equalities();
  std::vector<bool> zero_row(m, false);
  std::size_t found = 0;
  for (;;) {
    LinearSystem cur(n);
    for (const auto& c : ineq) cur.add_inequality(c.coeffs, c.rhs);
    for (const auto& c : eq) cur.add_equality(c.coeffs, c.rhs);
    std::vector<LinearConstraint> keep;
    for (const auto& c : ineq) {
      auto lp = lp_solve(cur, c.coeffs, Sense::kMinimize);
      if (lp.status == LpStatus::kOptimal && lp.optimum == c.rhs) {
        eq.push_back(c);
        ++found;
      } else {
        keep.push_back(c);
      }
    }
    ineq = std::move(keep);
    bool grew = false;
    LinearSystem now(n);
    for (const auto& c : ineq) now.add_inequality(c.coeffs, c.rhs);
    for (const auto& c : eq) now.add_equality(c.coeffs, c.rhs);
    for (std::size_t i = 0; i < m; ++i) {
      if (zero_row[i]) continue;
      RationalVector e(n, Rational(0));
      e[idx.index(i, i)] = 1;
      auto lp = lp_solve(now, e, Sense::kMaximize);
      if (lp.status != LpStatus::kOptimal || lp.optimum != 0) continue;
      zero_row[i] = true;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        RationalVector z(n, Rational(0));
        z[idx.index(i, j)] = 1;
        eq.push_back({std::move(z), 0});
        grew = true;
      }
    }
    if (!grew) {
      if (note && found > 0)
        *note = std::to_string(found) + " implicit equalities made explicit";
      return now;
    }
  }
}

std::vector<long> rationalization_denominators() {
  return {2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 20, 24, 32, 36, 48, 64, 100, 128, 256, 1000};
}

}  // namespace

const char* to_string(EquilibriumSet set) {
  switch (set) {
    case EquilibriumSet::kCeSym: return "ce_sym";
    case EquilibriumSet::kXeSym: return "xe_sym";
    case EquilibriumSet::kConvNashSym: return "conv_nash_sym";
  }
  return "unknown";
}

const char* to_string(MembershipAnswer answer) {
  switch (answer) {
    case MembershipAnswer::kIn: return "in";
    case MembershipAnswer::kOut: return "out";
    case MembershipAnswer::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<EquilibriumSet> parse_equilibrium_set(std::string_view text) {
  if (text == "ce") return EquilibriumSet::kCeSym;
  if (text == "xe") return EquilibriumSet::kXeSym;
  if (text == "conv-nash") return EquilibriumSet::kConvNashSym;
  return std::nullopt;
}

std::optional<ViolatedInequality> find_ce_violation(const SymmetricGame& game,
                                                    const JointDistribution& w) {
  const std::size_t m = game.num_strategies();
  if (w.num_strategies() != m) throw DimensionError("distribution size does not match game");
  std::optional<ViolatedInequality> worst;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      if (s == t) continue;
      Rational gain = 0;
      for (std::size_t j = 0; j < m; ++j) gain += (game.utility(t, j) - game.utility(s, j)) * w(s, j);
      if (gain > 0 && (!worst || gain > worst->gain)) worst = ViolatedInequality{s, t, gain};
    }
  return worst;
}

LinearSystem conv_nash_system(const JointDistribution& w,
                              const std::vector<MixedStrategy>& strategies) {
  const std::size_t m = w.num_strategies();
  const std::size_t k = strategies.size();
  LinearSystem sys(k);
  for (std::size_t a = 0; a < k; ++a) {
    RationalVector e(k, Rational(0));
    e[a] = -1;
    sys.add_inequality(std::move(e), 0);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      RationalVector row(k);
      for (std::size_t a = 0; a < k; ++a) row[a] = strategies[a][i] * strategies[a][j];
      sys.add_equality(std::move(row), w(i, j));
    }
  return sys;
}

MembershipVerdict membership(const SymmetricGame& game, const JointDistribution& w,
                             EquilibriumSet set, const CpOptions& cp) {
  MembershipVerdict v;
  v.set = set;
  if (w.num_strategies() != game.num_strategies())
    throw DimensionError("distribution size does not match game");
  if (auto a = w.asymmetry()) {
    v.answer = MembershipAnswer::kOut;
    v.asymmetry = a;
    v.note = "not symmetric";
    return v;
  }
  if (auto bad = find_ce_violation(game, w)) {
    v.answer = MembershipAnswer::kOut;
    v.violated = bad;
    v.note = "incentive constraint violated";
    return v;
  }
  switch (set) {
    case EquilibriumSet::kCeSym:
      v.answer = MembershipAnswer::kIn;
      return v;
    case EquilibriumSet::kXeSym: {
      auto ex = certify_conditionally_iid(w, cp);
      v.answer = ex.status == ExchangeabilityStatus::kConditionallyIid ? MembershipAnswer::kIn
                 : ex.status == ExchangeabilityStatus::kNotConditionallyIid
                     ? MembershipAnswer::kOut
                     : MembershipAnswer::kInconclusive;
      v.note = ex.note;
      v.exchangeability = std::move(ex);
      return v;
    }
    case EquilibriumSet::kConvNashSym: {
      auto nash = enumerate_symmetric_nash(game);
      v.nash_strategies = nash.strategies;
      auto sys = conv_nash_system(w, nash.strategies);
      auto lp = lp_feasible(sys);
      if (lp.status == LpStatus::kOptimal) {
        v.answer = MembershipAnswer::kIn;
        v.combination = NashCombination{nash.strategies, lp.point};
      } else if (nash.degenerate) {
        v.answer = MembershipAnswer::kInconclusive;
        v.note = "symmetric Nash set is not finite; enumerated points do not suffice";
      } else {
        v.answer = MembershipAnswer::kOut;
        v.farkas = lp.certificate;
        v.note = "not a mixture of symmetric Nash outer products";
      }
      return v;
    }
  }
  return v;
}

bool verify_membership(const SymmetricGame& game, const JointDistribution& w,
                       const MembershipVerdict& v) {
  if (v.asymmetry) {
    auto [i, j] = *v.asymmetry;
    return v.answer == MembershipAnswer::kOut && w(i, j) != w(j, i);
  }
  if (v.violated) {
    const auto& bad = *v.violated;
    Rational gain = 0;
    for (std::size_t j = 0; j < game.num_strategies(); ++j)
      gain += (game.utility(bad.deviation, j) - game.utility(bad.recommended, j)) *
              w(bad.recommended, j);
    return v.answer == MembershipAnswer::kOut && gain == bad.gain && gain > 0;
  }
  switch (v.answer) {
    case MembershipAnswer::kInconclusive:
      return true;
    case MembershipAnswer::kIn:
      if (find_ce_violation(game, w) || !w.is_symmetric()) return false;
      if (v.set == EquilibriumSet::kXeSym)
        return v.exchangeability && verify_certificate(w, *v.exchangeability);
      if (v.set == EquilibriumSet::kConvNashSym) {
        if (!v.combination) return false;
        const auto& c = *v.combination;
        for (const auto& x : c.strategies)
          if (!is_symmetric_nash(game, x)) return false;
        auto sys = conv_nash_system(w, c.strategies);
        return sys.satisfied_by(c.weights);
      }
      return true;
    case MembershipAnswer::kOut:
      if (v.set == EquilibriumSet::kXeSym)
        return v.exchangeability && verify_certificate(w, *v.exchangeability);
      if (v.set == EquilibriumSet::kConvNashSym)
        return v.farkas && verify_farkas(conv_nash_system(w, v.nash_strategies), *v.farkas);
      return false;
  }
  return false;
}

OptimizationResult maximize_linear(const SymmetricGame& game, EquilibriumSet set,
                                   const RationalMatrix& c, const OptimizeOptions& options) {
  const std::size_t m = game.num_strategies();
  if (c.rows() != m || c.cols() != m) throw DimensionError("objective shape mismatch");
  SymIndex idx(m);
  OptimizationResult out;
  out.set = set;
  const RationalVector obj = symmetric_functional(c);
  const LinearSystem sys = ce_system(game, true);

  auto set_exact = [&](const Rational& value, const RationalMatrix& w) {
    out.exact_value = value;
    out.value = to_double(value);
    out.exact_argmax = JointDistribution(w);
    out.argmax = to_real(w);
    out.tolerance = 0;
  };

  if (set == EquilibriumSet::kConvNashSym) {
    auto nash = enumerate_symmetric_nash(game);
    out.method = "enumeration";
    const MixedStrategy* best = nullptr;
    Rational best_value;
    for (const auto& x : nash.strategies) {
      Rational v = functional_value(c, x);
      if (!best || v > best_value) {
        best = &x;
        best_value = v;
      }
    }
    set_exact(best_value, outer(*best).matrix());
    if (nash.degenerate) {
      // Continua of equilibria: x x^T is not linear in x, so vertices of the
      // equilibrium polytopes need not attain the maximum.
      out.inconclusive = true;
      out.certified_lower_bound = best_value;
      out.exact_value.reset();
      out.note = "symmetric Nash set is not finite; value is over enumerated points only";
    }
    return out;
  }

  auto lp = lp_solve(sys, obj, Sense::kMaximize);
  if (lp.status != LpStatus::kOptimal) throw std::logic_error("CE program is not solvable");
  const RationalMatrix lp_point = idx.expand(lp.point);

  if (set == EquilibriumSet::kCeSym) {
    out.method = "lp";
    set_exact(lp.optimum, lp_point);
    return out;
  }

  // Exchangeable set.
  if (m <= 4) {
    bool all_dnn = true;
    for (const auto& v : enumerate_vertices(sys))
      if (!is_psd_exact(idx.expand(v)).psd) {
        all_dnn = false;
        break;
      }
    if (all_dnn) {
      out.method = "lp-collapse";
      out.note = "every CE vertex is doubly nonnegative, so the sets coincide";
      set_exact(lp.optimum, lp_point);
      return out;
    }
  }

  std::string fr_note;
  LinearSystem reduced = facial_reduction(sys, m, &fr_note);
  SdpProblem problem = SdpProblem::from_system(m, reduced, false);
  problem.set_objective(to_real(obj));
  SdpResult sdp = sdp_solve(problem, options.tol);
  out.method = "sdp";
  out.note = fr_note;
  out.upper_bound = m >= 5;
  if (sdp.status != SdpStatus::kOptimal) {
    out.inconclusive = true;
    out.value = std::numeric_limits<double>::quiet_NaN();
    out.tolerance = std::numeric_limits<double>::infinity();
    out.note = std::string("SDP ") + to_string(sdp.status) + ": " + sdp.diagnostics;
    out.sdp = std::move(sdp);
    return out;
  }
  out.value = sdp.value;
  out.argmax = sdp.w;
  out.tolerance = std::max({options.tol, sdp.gap, sdp.max_violation,
                            -std::min(0.0, sdp.min_eigenvalue)});
  if (sdp.relaxation > 0) out.tolerance = std::max(out.tolerance, 1e-6);

  if (m <= 4) {
    // Small-denominator reconstruction, verified exactly.
    std::vector<RationalMatrix> candidates;
    if (std::abs(sdp.value - to_double(lp.optimum)) <= 1e-6) candidates.push_back(lp_point);
    for (long den : rationalization_denominators()) {
      RationalVector flat(sdp.flat.size());
      for (std::size_t k = 0; k < flat.size(); ++k) flat[k] = approximate_rational(sdp.flat[k], den);
      candidates.push_back(idx.expand(flat));
    }
    for (const auto& cand : candidates) {
      std::optional<JointDistribution> w;
      try {
        w.emplace(cand);
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (!exact_dnn_ce(game, *w)) continue;
      Rational v = functional_value(c, cand);
      if (!out.certified_lower_bound || v > *out.certified_lower_bound) {
        out.certified_lower_bound = v;
        if (v == lp.optimum) {
          out.note += out.note.empty() ? "" : "; ";
          out.note += "rational optimum meets the CE bound";
          out.exact_argmax = std::move(w);
          out.exact_value = v;
          out.value = to_double(v);
          out.tolerance = 0;
          break;
        }
      }
    }
  }
  out.sdp = std::move(sdp);
  return out;
}

OptimizationResult max_utility(const SymmetricGame& game, EquilibriumSet set,
                               const OptimizeOptions& options) {
  return maximize_linear(game, set, game.payoff(), options);
}

}  // namespace xeq
