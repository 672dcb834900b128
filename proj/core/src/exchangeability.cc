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

#include "xeq/exchangeability.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "xeq/linear_system.h"
#include "xeq/lp.h"
#include "xeq/psd.h"
#include "xeq/random.h"

namespace xeq {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Real roots of t^3 + b t^2 + c t + d.
std::vector<double> cubic_roots(double b, double c, double d) {
  const double shift = b / 3;
  const double p = c - b * b / 3;
  const double q = 2 * b * b * b / 27 - b * c / 3 + d;
  std::vector<double> out;
  const double disc = q * q / 4 + p * p * p / 27;
  if (std::abs(p) < 1e-300) {
    out.push_back(std::cbrt(-q) - shift);
  } else if (disc > 0) {
    const double s = std::sqrt(disc);
    out.push_back(std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s) - shift);
  } else {
    const double r = 2 * std::sqrt(-p / 3);
    const double arg = std::clamp(3 * q / (2 * p) * std::sqrt(-3 / p), -1.0, 1.0);
    const double phi = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) out.push_back(r * std::cos(phi - 2 * kPi * k / 3) - shift);
  }
  return out;
}

// Symmetric nonnegative factorization W ~= H H^T by exact coordinate
// minimization; H is m x k, row-major.
class SymNmf {
 public:
  SymNmf(const RealMatrix& w, std::size_t k) : w_(w), m_(w.rows()), k_(k) {}

  void init(Rng& rng) {
    h_.assign(m_ * k_, 0);
    for (auto& v : h_) v = uniform01(rng);
    double target = 0, have = 0;
    for (double v : w_.data()) target += v;
    recompute_residual();
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) have += w_(i, j) - r_[i * m_ + j];
    const double scale = have > 0 ? std::sqrt(target / have) : 1;
    for (auto& v : h_) v *= scale;
    recompute_residual();
  }

  void sweep() {
    for (std::size_t c = 0; c < k_; ++c)
      for (std::size_t i = 0; i < m_; ++i) update(i, c);
  }

  void recompute_residual() {
    r_.assign(m_ * m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) {
        double s = 0;
        for (std::size_t c = 0; c < k_; ++c) s += h(i, c) * h(j, c);
        r_[i * m_ + j] = w_(i, j) - s;
      }
  }

  double max_abs_residual() const {
    double mx = 0;
    for (double v : r_) mx = std::max(mx, std::abs(v));
    return mx;
  }

  double h(std::size_t i, std::size_t c) const { return h_[i * k_ + c]; }
  std::size_t k() const { return k_; }

 private:
  double& hr(std::size_t i, std::size_t c) { return h_[i * k_ + c]; }

  void update(std::size_t i, std::size_t c) {
    const double hi = h(i, c);
    const double rii = r_[i * m_ + i];
    double others_sq = 0, cross = 0;
    for (std::size_t j = 0; j < m_; ++j) {
      if (j == i) continue;
      const double hj = h(j, c);
      others_sq += hj * hj;
      cross += r_[i * m_ + j] * hj;
    }
    auto objective = [&](double d) {
      const double a = rii - 2 * d * hi - d * d;
      double s = a * a;
      for (std::size_t j = 0; j < m_; ++j) {
        if (j == i) continue;
        const double e = r_[i * m_ + j] - d * h(j, c);
        s += 2 * e * e;
      }
      return s;
    };
    double best = 0, best_val = objective(0);
    auto consider = [&](double d) {
      d = std::max(d, -hi);
      const double v = objective(d);
      if (v < best_val) {
        best_val = v;
        best = d;
      }
    };
    consider(-hi);
    for (double d : cubic_roots(3 * hi, 2 * hi * hi + others_sq - rii, -(rii * hi + cross)))
      if (std::isfinite(d)) consider(d);
    if (best == 0) return;
    r_[i * m_ + i] -= 2 * best * hi + best * best;
    for (std::size_t j = 0; j < m_; ++j) {
      if (j == i) continue;
      const double delta = best * h(j, c);
      r_[i * m_ + j] -= delta;
      r_[j * m_ + i] -= delta;
    }
    hr(i, c) = hi + best;
  }

  const RealMatrix& w_;
  std::size_t m_, k_;
  std::vector<double> h_;
  std::vector<double> r_;
};

std::vector<CpAtom> atoms_from_columns(const SymNmf& nmf, std::size_t m) {
  std::vector<CpAtom> raw;
  for (std::size_t c = 0; c < nmf.k(); ++c) {
    double s = 0;
    for (std::size_t i = 0; i < m; ++i) s += nmf.h(i, c);
    if (s * s < 1e-15) continue;
    CpAtom a;
    a.weight = s * s;
    for (std::size_t i = 0; i < m; ++i) a.x.push_back(nmf.h(i, c) / s);
    raw.push_back(std::move(a));
  }
  // Merge columns that point the same way.
  std::vector<CpAtom> merged;
  for (auto& a : raw) {
    bool done = false;
    for (auto& b : merged) {
      double diff = 0;
      for (std::size_t i = 0; i < m; ++i) diff = std::max(diff, std::abs(a.x[i] - b.x[i]));
      if (diff < 1e-6) {
        const double tw = a.weight + b.weight;
        for (std::size_t i = 0; i < m; ++i)
          b.x[i] = (a.weight * a.x[i] + b.weight * b.x[i]) / tw;
        b.weight = tw;
        done = true;
        break;
      }
    }
    if (!done) merged.push_back(std::move(a));
  }
  return merged;
}

CpFactorization from_exact(std::vector<ExactCpAtom> exact) {
  CpFactorization f;
  for (const auto& a : exact) {
    CpAtom d;
    d.weight = to_double(a.weight);
    d.x = to_real(a.x.probabilities());
    f.atoms.push_back(std::move(d));
  }
  f.exact_atoms = std::move(exact);
  f.residual = 0;
  return f;
}

// Rounds atom directions to small denominators and solves for nonnegative
// weights exactly.
std::optional<CpFactorization> rationalize(const JointDistribution& w,
                                           const std::vector<CpAtom>& atoms) {
  const std::size_t m = w.num_strategies();
  SymIndex idx(m);
  std::vector<RationalVector> dirs;
  for (long den : {2L, 4L, 8L, 16L, 32L, 64L, 128L, 256L, 1000L, 4096L}) {
    for (const auto& a : atoms) {
      RationalVector x(m);
      Rational sum = 0;
      for (std::size_t i = 0; i < m; ++i) {
        x[i] = std::max(0.0, a.x[i]) < 0.5 / den ? Rational(0)
                                                 : approximate_rational(a.x[i], den);
        sum += x[i];
      }
      if (sum == 0) continue;
      for (auto& v : x) v /= sum;
      if (std::find(dirs.begin(), dirs.end(), x) == dirs.end()) dirs.push_back(std::move(x));
    }
    LinearSystem sys(dirs.size());
    sys.add_nonnegativity();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      auto [i, j] = idx.entry(k);
      RationalVector row(dirs.size());
      for (std::size_t d = 0; d < dirs.size(); ++d) row[d] = dirs[d][i] * dirs[d][j];
      sys.add_equality(std::move(row), w(i, j));
    }
    auto res = lp_feasible(sys);
    if (res.status != LpStatus::kOptimal) continue;
    std::vector<ExactCpAtom> exact;
    for (std::size_t d = 0; d < dirs.size(); ++d)
      if (res.point[d] > 0) exact.push_back({res.point[d], MixedStrategy(dirs[d])});
    return from_exact(std::move(exact));
  }
  return std::nullopt;
}

void require_symmetric(const JointDistribution& w) {
  if (!w.is_symmetric()) throw std::invalid_argument("factorization needs a symmetric matrix");
}

struct StartOutcome {
  bool success = false;
  std::optional<CpFactorization> result;
};

StartOutcome run_start(const JointDistribution& w, const RealMatrix& wd,
                       const CpOptions& opt, int start) {
  const std::size_t m = w.num_strategies();
  Rng rng(opt.seed + static_cast<std::uint64_t>(start));
  SymNmf nmf(wd, m * (m + 1) / 2);
  nmf.init(rng);
  constexpr int kCheckEvery = 50;
  bool tried_rational = false;
  for (int it = 1; it <= opt.iterations; ++it) {
    nmf.sweep();
    if (it % kCheckEvery != 0 && it != opt.iterations) continue;
    nmf.recompute_residual();  // resync against drift
    const double res = nmf.max_abs_residual();
    if (res <= 1e-5 && (!tried_rational || it % 1000 == 0 || res <= opt.tol)) {
      tried_rational = true;
      if (auto exact = rationalize(w, atoms_from_columns(nmf, m))) return {true, exact};
    }
    if (res <= opt.tol) break;
  }
  nmf.recompute_residual();
  CpFactorization f;
  f.atoms = atoms_from_columns(nmf, m);
  f.residual = reconstruction_residual(w, f.atoms);
  if (f.residual <= opt.tol) return {true, std::move(f)};
  return {};
}

}  // namespace

double reconstruction_residual(const JointDistribution& w, const std::vector<CpAtom>& atoms) {
  const std::size_t m = w.num_strategies();
  double mx = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0;
      for (const auto& a : atoms) s += a.weight * a.x[i] * a.x[j];
      mx = std::max(mx, std::abs(to_double(w(i, j)) - s));
    }
  return mx;
}

std::optional<CpFactorization> cp_factorize(const JointDistribution& w,
                                            const CpOptions& options) {
  require_symmetric(w);
  const std::size_t m = w.num_strategies();

  MixedStrategy marginal(w.row_marginal());
  if (outer(marginal) == w) return from_exact({{Rational(1), marginal}});
  bool diagonal = true;
  for (std::size_t i = 0; i < m && diagonal; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && w(i, j) != 0) diagonal = false;
  if (diagonal) {
    std::vector<ExactCpAtom> atoms;
    for (std::size_t i = 0; i < m; ++i)
      if (w(i, i) > 0) atoms.push_back({w(i, i), MixedStrategy::pure(m, i)});
    return from_exact(std::move(atoms));
  }

  const RealMatrix wd = to_real(w.matrix());
  const int starts = std::max(1, options.starts);
  std::vector<StartOutcome> outcomes(starts);
  // Lowest successful start index wins, so the answer is independent of
  // scheduling; later starts are skipped once a lower one succeeded.
  std::atomic<int> best{std::numeric_limits<int>::max()};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int s = next.fetch_add(1);
      if (s >= starts || s > best.load()) return;
      outcomes[s] = run_start(w, wd, options, s);
      if (outcomes[s].success) {
        int cur = best.load();
        while (s < cur && !best.compare_exchange_weak(cur, s)) {
        }
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(starts));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  const int b = best.load();
  if (b == std::numeric_limits<int>::max()) return std::nullopt;
  return outcomes[b].result;
}

const char* to_string(ExchangeabilityStatus status) {
  switch (status) {
    case ExchangeabilityStatus::kConditionallyIid: return "conditionally_iid";
    case ExchangeabilityStatus::kNotConditionallyIid: return "not_conditionally_iid";
    case ExchangeabilityStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kFactorization: return "factorization";
    case CertificateKind::kNegativeDirection: return "negative_direction";
    case CertificateKind::kZeroPattern: return "zero_pattern";
    case CertificateKind::kAsymmetry: return "asymmetry";
    case CertificateKind::kDnnOnly: return "dnn_only";
  }
  return "unknown";
}

ExchangeabilityVerdict certify_conditionally_iid(const JointDistribution& w,
                                                 const CpOptions& options) {
  const std::size_t m = w.num_strategies();
  ExchangeabilityVerdict v;
  if (auto a = w.asymmetry()) {
    v.status = ExchangeabilityStatus::kNotConditionallyIid;
    v.kind = CertificateKind::kAsymmetry;
    v.index_pair = a;
    return v;
  }
  for (std::size_t t = 0; t < m; ++t) {
    if (w(t, t) != 0) continue;
    for (std::size_t u = 0; u < m; ++u) {
      if (u != t && w(t, u) > 0) {
        v.status = ExchangeabilityStatus::kNotConditionallyIid;
        v.kind = CertificateKind::kZeroPattern;
        v.index_pair = std::make_pair(t, u);
        return v;
      }
    }
  }
  PsdResult psd = is_psd_exact(w.matrix());
  if (!psd.psd) {
    v.status = ExchangeabilityStatus::kNotConditionallyIid;
    v.kind = CertificateKind::kNegativeDirection;
    v.negative_direction = std::move(psd.witness);
    return v;
  }
  // Entrywise nonnegativity is a JointDistribution invariant, so W is DNN.
  auto f = cp_factorize(w, options);
  if (m >= 5) {
    // A numeric factorization does not prove membership at this size.
    if (f && f->exact()) {
      v.status = ExchangeabilityStatus::kConditionallyIid;
      v.kind = CertificateKind::kFactorization;
      v.factorization = std::move(f);
    } else {
      v.status = ExchangeabilityStatus::kInconclusive;
      v.kind = CertificateKind::kDnnOnly;
      v.note = "doubly nonnegative; no exact factorization found for m >= 5";
    }
    return v;
  }
  v.status = ExchangeabilityStatus::kConditionallyIid;
  if (f) {
    v.kind = CertificateKind::kFactorization;
    v.factorization = std::move(f);
  } else {
    v.kind = CertificateKind::kDnnOnly;
    v.note = "doubly nonnegative with m <= 4, hence completely positive";
  }
  return v;
}

bool verify_certificate(const JointDistribution& w, const ExchangeabilityVerdict& v) {
  const std::size_t m = w.num_strategies();
  switch (v.kind) {
    case CertificateKind::kAsymmetry:
      return v.index_pair && w(v.index_pair->first, v.index_pair->second) !=
                                 w(v.index_pair->second, v.index_pair->first);
    case CertificateKind::kZeroPattern:
      return v.index_pair && w(v.index_pair->first, v.index_pair->first) == 0 &&
             w(v.index_pair->first, v.index_pair->second) > 0;
    case CertificateKind::kNegativeDirection:
      return v.negative_direction && verify_negative_direction(w.matrix(), *v.negative_direction);
    case CertificateKind::kFactorization: {
      if (!v.factorization) return false;
      const auto& f = *v.factorization;
      if (f.exact()) {
        RationalMatrix sum(m, m, Rational(0));
        for (const auto& a : f.exact_atoms) {
          if (a.weight <= 0) return false;
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) sum(i, j) += a.weight * a.x[i] * a.x[j];
        }
        return sum == w.matrix();
      }
      return reconstruction_residual(w, f.atoms) <= f.residual + 1e-15;
    }
    case CertificateKind::kDnnOnly:
      return w.is_symmetric() && is_psd_exact(w.matrix()).psd;
  }
  return false;
}

CorrelationScheme scheme_from_factorization(const CpFactorization& f) {
  CorrelationScheme s;
  if (f.atoms.empty()) throw std::invalid_argument("empty factorization");
  s.num_strategies = f.atoms.front().x.size();
  for (const auto& a : f.atoms) {
    s.state_weights.push_back(a.weight);
    s.recommendation.push_back(a.x);
  }
  if (f.exact()) s.exact = f.exact_atoms;
  return s;
}

RealMatrix induced_distribution(const CorrelationScheme& scheme) {
  const std::size_t m = scheme.num_strategies;
  RealMatrix p(m, m, 0.0);
  for (std::size_t s = 0; s < scheme.state_weights.size(); ++s)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        p(i, j) += scheme.state_weights[s] * scheme.recommendation[s][i] *
                   scheme.recommendation[s][j];
  return p;
}

std::optional<JointDistribution> induced_distribution_exact(const CorrelationScheme& scheme) {
  if (!scheme.exact) return std::nullopt;
  const std::size_t m = scheme.num_strategies;
  RationalMatrix p(m, m, Rational(0));
  for (const auto& a : *scheme.exact)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) p(i, j) += a.weight * a.x[i] * a.x[j];
  return JointDistribution(std::move(p));
}

SchemeReport verify_scheme_equilibrium(const SymmetricGame& game,
                                       const CorrelationScheme& scheme,
                                       std::size_t samples, std::uint64_t seed,
                                       double tol) {
  const std::size_t m = game.num_strategies();
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  if (scheme.num_strategies != m) throw DimensionError("scheme and game sizes differ");
  if (m > kMaxSchemeStrategies) throw BudgetError("too many deviation maps");

  SchemeReport report;
  report.samples = samples;
  report.seed = seed;
  report.rng = kRngAlgorithm;

  Rng rng(seed);
  std::vector<double> counts(m * m, 0);
  for (std::size_t n = 0; n < samples; ++n) {
    const std::size_t state = sample_index(rng, scheme.state_weights);
    const std::size_t a = sample_index(rng, scheme.recommendation[state]);
    const std::size_t b = sample_index(rng, scheme.recommendation[state]);
    counts[a * m + b] += 1;
  }
  const RealMatrix p = induced_distribution(scheme);
  const auto exact = induced_distribution_exact(scheme);
  const RealMatrix a = to_real(game.payoff());

  std::vector<std::size_t> f(m, 0);
  report.equilibrium = true;
  report.max_exact_gain = -std::numeric_limits<double>::infinity();
  for (;;) {
    DeviationGain g;
    g.map = f;
    double mean = 0, second = 0, ex = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const double d = a(f[i], j) - a(i, j);
        const double ph = counts[i * m + j] / static_cast<double>(samples);
        mean += ph * d;
        second += ph * d * d;
        ex += p(i, j) * d;
      }
    if (exact) {
      Rational r = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          r += (*exact)(i, j) * (game.utility(f[i], j) - game.utility(i, j));
      g.exact_rational = r;
      ex = to_double(r);
      if (r > 0) report.equilibrium = false;
    } else if (ex > tol) {
      report.equilibrium = false;
    }
    g.exact = ex;
    g.estimate = mean;
    g.std_error = std::sqrt(std::max(0.0, second - mean * mean) / static_cast<double>(samples));
    const double diff = std::abs(mean - ex);
    if (g.std_error > 0)
      report.max_z = std::max(report.max_z, diff / g.std_error);
    else if (diff > 1e-12)
      report.max_z = std::numeric_limits<double>::infinity();
    report.max_exact_gain = std::max(report.max_exact_gain, ex);
    report.gains.push_back(std::move(g));

    std::size_t pos = 0;
    while (pos < m && ++f[pos] == m) f[pos++] = 0;
    if (pos == m) break;
  }
  return report;
}

}  // namespace xeq
