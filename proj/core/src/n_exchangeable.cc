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


#include "xeq/n_exchangeable.h"

#include <gmpxx.h>

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "xeq/random.h"

namespace xeq {
namespace {

void orbits_rec(std::size_t m, int left, CountVector& cur, std::vector<CountVector>& out) {
  const std::size_t i = cur.size();
  if (i + 1 == m) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= left; ++v) {
    cur.push_back(v);
    orbits_rec(m, left - v, cur, out);
    cur.pop_back();
  }
}

void check_orbit(const CountVector& k, std::size_t m, int n) {
  if (k.size() != m) throw std::invalid_argument("count vector has wrong length");
  int total = 0;
  for (int v : k) {
    if (v < 0) throw std::invalid_argument("negative count");
    total += v;
  }
  if (total != n) throw std::invalid_argument("counts do not sum to N");
}

// Orbit weight times k_i (k_j - [i == j]) / (N (N - 1)).
Rational pair_share(const CountVector& k, std::size_t i, std::size_t j, int n) {
  const long a = k[i];
  const long b = k[j] - (i == j ? 1 : 0);
  return make_rational(a * b, static_cast<long>(n) * (n - 1));
}

}  // namespace

std::size_t orbit_count(std::size_t m, int n) {
  if (m == 0 || n < 0) return 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n) + m - 1, m - 1);
  if (!c.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return c.get_ui();
}

std::vector<CountVector> enumerate_orbits(std::size_t m, int n, std::size_t budget) {
  if (m == 0 || n < 0) throw std::invalid_argument("need m >= 1 and N >= 0");
  const std::size_t count = orbit_count(m, n);
  if (count > budget)
    throw BudgetError(std::to_string(count) + " orbits exceed the budget of " +
                      std::to_string(budget));
  std::vector<CountVector> out;
  out.reserve(count);
  CountVector cur;
  orbits_rec(m, n, cur, out);
  return out;
}

Rational multinomial(const CountVector& k) {
  mpz_class num = 1, den = 1, f;
  int total = 0;
  for (int v : k) {
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    den *= f;
    total += v;
  }
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(total));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

OrbitDistribution::OrbitDistribution(std::size_t m, int n, std::map<CountVector, Rational> weights)
    : m_(m), n_(n) {
  if (m == 0 || n < 1) throw std::invalid_argument("need m >= 1 and N >= 1");
  Rational total = 0;
  for (auto& [k, w] : weights) {
    check_orbit(k, m, n);
    if (w < 0) throw std::invalid_argument("negative orbit weight");
    total += w;
    if (w != 0) weights_.emplace(k, w);
  }
  if (total != 1) throw std::invalid_argument("orbit weights must sum to one");
}

OrbitDistribution OrbitDistribution::point_mass(const CountVector& k) {
  const int n = std::accumulate(k.begin(), k.end(), 0);
  return OrbitDistribution(k.size(), n, {{k, Rational(1)}});
}

OrbitDistribution OrbitDistribution::iid(const MixedStrategy& x, int n) {
  const std::size_t m = x.size();
  std::map<CountVector, Rational> w;
  for (const auto& k : enumerate_orbits(m, n)) {
    Rational p = multinomial(k);
    for (std::size_t i = 0; i < m && p != 0; ++i)
      for (int e = 0; e < k[i]; ++e) p *= x[i];
    if (p != 0) w.emplace(k, p);
  }
  return OrbitDistribution(m, n, std::move(w));
}

Rational OrbitDistribution::weight(const CountVector& k) const {
  auto it = weights_.find(k);
  return it == weights_.end() ? Rational(0) : it->second;
}

JointDistribution bivariate_marginal(const OrbitDistribution& d) {
  const std::size_t m = d.num_strategies();
  const int n = d.num_players();
  if (n < 2) throw std::invalid_argument("bivariate marginal needs N >= 2");
  RationalMatrix p(m, m, Rational(0));
  for (const auto& [k, w] : d.weights())
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (k[i] > 0) p(i, j) += w * pair_share(k, i, j, n);
  return JointDistribution(std::move(p));
}

OrbitDistribution drop_one_marginal(const OrbitDistribution& d) {
  const std::size_t m = d.num_strategies();
  const int n = d.num_players();
  if (n < 3) throw std::invalid_argument("drop_one_marginal needs N >= 3");
  // Removing one of the N players at random: strategy i leaves with
  // probability k_i / N.
  std::map<CountVector, Rational> out;
  for (const auto& [k, w] : d.weights())
    for (std::size_t i = 0; i < m; ++i) {
      if (k[i] == 0) continue;
      CountVector kk = k;
      --kk[i];
      out[kk] += w * make_rational(k[i], n);
    }
  return OrbitDistribution(m, n - 1, std::move(out));
}

LinearSystem extendability_system(const JointDistribution& w, int n, std::size_t budget) {
  if (n < 2) throw std::invalid_argument("extendability needs N >= 2");
  const std::size_t m = w.num_strategies();
  const auto orbits = enumerate_orbits(m, n, budget);
  const std::size_t v = orbits.size();
  LinearSystem sys(v);
  sys.add_nonnegativity();
  sys.add_equality(RationalVector(v, Rational(1)), 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      RationalVector row(v);
      for (std::size_t o = 0; o < v; ++o) row[o] = pair_share(orbits[o], i, j, n);
      sys.add_equality(std::move(row), w(i, j));
    }
  return sys;
}

ExtendabilityResult extendability_lp(const SymmetricGame& game, const JointDistribution& w,
                                     int n, std::size_t budget) {
  if (game.num_strategies() != w.num_strategies())
    throw DimensionError("distribution size does not match game");
  ExtendabilityResult out;
  if (!w.is_symmetric()) {
    // No exchangeable distribution has an asymmetric pair marginal; the
    // system below only pins the upper triangle, so refuse explicitly.
    throw std::invalid_argument("distribution is not symmetric");
  }
  const auto orbits = enumerate_orbits(w.num_strategies(), n, budget);
  auto lp = lp_feasible(extendability_system(w, n, budget));
  if (lp.status != LpStatus::kOptimal) {
    out.certificate = lp.certificate;
    return out;
  }
  std::map<CountVector, Rational> weights;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (lp.point[o] != 0) weights.emplace(orbits[o], lp.point[o]);
  out.feasible = true;
  out.extension.emplace(w.num_strategies(), n, std::move(weights));
  return out;
}

NExchangeableCheck n_exchangeable_equilibrium_check(const SymmetricGame& game,
                                                    const OrbitDistribution& d) {
  const std::size_t m = game.num_strategies();
  if (d.num_strategies() != m) throw DimensionError("orbit distribution does not match game");
  const JointDistribution p = bivariate_marginal(d);
  NExchangeableCheck out;
  out.equilibrium = true;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      if (s == t) continue;
      Rational margin = 0;
      for (std::size_t j = 0; j < m; ++j) margin += (game.utility(s, j) - game.utility(t, j)) * p(s, j);
      if (margin < 0) out.equilibrium = false;
      out.margins.push_back({s, t, margin, margin * (d.num_players() - 1)});
    }
  return out;
}

SymmetricGame minority_game() {
  return SymmetricGame(RationalMatrix{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}},
                       {"A", "B"});
}

OrbitDistribution minority_pi(int n) {
  if (n < 1) throw std::invalid_argument("minority_pi needs N >= 1");
  if (n % 2 == 0) return OrbitDistribution::point_mass({n / 2, n / 2});
  return OrbitDistribution(2, n, {{{n / 2, n - n / 2}, make_rational(1, 2)},
                                  {{n - n / 2, n / 2}, make_rational(1, 2)}});
}

LinearSystem minority_extension_system(int n) {
  const OrbitDistribution pi = minority_pi(n);
  const auto big = enumerate_orbits(2, n + 1);
  const auto small = enumerate_orbits(2, n);
  LinearSystem sys(big.size());
  sys.add_nonnegativity();
  sys.add_equality(RationalVector(big.size(), Rational(1)), 1);
  for (const auto& target : small) {
    RationalVector row(big.size(), Rational(0));
    for (std::size_t o = 0; o < big.size(); ++o)
      for (std::size_t i = 0; i < 2; ++i) {
        CountVector kk = big[o];
        if (kk[i] == 0) continue;
        --kk[i];
        if (kk == target) row[o] += make_rational(big[o][i], n + 1);
      }
    sys.add_equality(std::move(row), pi.weight(target));
  }
  return sys;
}

std::vector<MinorityRow> minority_parity_suite(int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  if (n_max > kMaxMinorityN)
    throw BudgetError("n_max is limited to " + std::to_string(kMaxMinorityN));
  std::vector<MinorityRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    MinorityRow row;
    row.n = n;
    const auto sys = minority_extension_system(n);
    const auto big = enumerate_orbits(2, n + 1);
    auto lp = lp_feasible(sys);
    if (lp.status != LpStatus::kOptimal) {
      row.certificate = lp.certificate;
      rows.push_back(std::move(row));
      continue;
    }
    row.feasible = true;
    // Unique iff every coordinate has equal minimum and maximum.
    row.unique = true;
    for (std::size_t o = 0; o < big.size() && row.unique; ++o) {
      RationalVector e(big.size(), Rational(0));
      e[o] = 1;
      auto lo = lp_solve(sys, e, Sense::kMinimize);
      auto hi = lp_solve(sys, e, Sense::kMaximize);
      row.unique = lo.optimum == hi.optimum;
    }
    std::map<CountVector, Rational> weights;
    for (std::size_t o = 0; o < big.size(); ++o)
      if (lp.point[o] != 0) weights.emplace(big[o], lp.point[o]);
    row.extension.emplace(2, n + 1, std::move(weights));
    row.extension_is_next_pi = *row.extension == minority_pi(n + 1);
    rows.push_back(std::move(row));
  }
  return rows;
}

EnvelopeSample envelope_simulate(const OrbitDistribution& d, std::uint64_t seed,
                                 std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  const std::size_t m = d.num_strategies();
  const int n = d.num_players();
  if (n < 2) throw std::invalid_argument("envelopes need N >= 2");
  std::vector<const CountVector*> orbits;
  std::vector<double> probs;
  for (const auto& [k, w] : d.weights()) {
    orbits.push_back(&k);
    probs.push_back(to_double(w));
  }
  Rng rng(seed);
  EnvelopeSample out;
  out.seed = seed;
  out.trials = trials;
  out.counts.assign(m * m, 0);
  std::vector<std::size_t> pile(n);
  for (std::size_t t = 0; t < trials; ++t) {
    const CountVector& k = *orbits[sample_index(rng, probs)];
    std::size_t pos = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (int c = 0; c < k[i]; ++c) pile[pos++] = i;
    // First two steps of a Fisher-Yates shuffle: two distinct envelopes.
    for (std::size_t a = 0; a < 2; ++a) {
      const std::size_t b = a + uniform_below(rng, n - a);
      std::swap(pile[a], pile[b]);
    }
    ++out.counts[pile[0] * m + pile[1]];
  }
  out.frequencies = RealMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.frequencies(i, j) = static_cast<double>(out.counts[i * m + j]) / trials;
  return out;
}

}  // namespace xeq
