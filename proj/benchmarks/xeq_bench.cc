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


#include <benchmark/benchmark.h>

#include <filesystem>

#include "xeq/exchangeability.h"
#include "xeq/io.h"
#include "xeq/lp.h"
#include "xeq/n_exchangeable.h"
#include "xeq/nash.h"
#include "xeq/psd.h"
#include "xeq/sdp.h"
#include "xeq/vertex_enum.h"
#include "xeq/xe_optimizer.h"

namespace xeq {
namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(XEQ_DATA_DIR) / name; }

SymmetricGame chicken() { return load_game(data("chicken.json")); }
SymmetricGame nested() { return load_game(data("exeqsep.json")); }
SymmetricGame payoff_example() { return load_game(data("payoffsep.json")); }

void BM_CeVertices(benchmark::State& state) {
  const SymmetricGame g = state.range(0) == 2 ? chicken() : nested();
  const LinearSystem sys = ce_system(g, true);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(sys));
}
BENCHMARK(BM_CeVertices)->Arg(2)->Arg(3);

void BM_SymmetricNash(benchmark::State& state) {
  const SymmetricGame g = nested();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_symmetric_nash(g));
}
BENCHMARK(BM_SymmetricNash);

void BM_PsdExact(benchmark::State& state) {
  const std::size_t m = state.range(0);
  RationalMatrix w(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) w(i, j) = make_rational(1 + (i == j) * static_cast<long>(m), 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_psd_exact(w));
}
BENCHMARK(BM_PsdExact)->DenseRange(2, 6, 2);

void BM_SdpChicken(benchmark::State& state) {
  SdpProblem p = SdpProblem::from_system(2, ce_system(chicken(), true));
  p.set_objective_matrix(to_real(chicken().payoff()));
  for (auto _ : state) benchmark::DoNotOptimize(sdp_solve(p));
}
BENCHMARK(BM_SdpChicken)->Unit(benchmark::kMicrosecond);

void BM_MaxUtility(benchmark::State& state) {
  const SymmetricGame g = payoff_example();
  const auto set = static_cast<EquilibriumSet>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_utility(g, set));
  state.SetLabel(to_string(set));
}
BENCHMARK(BM_MaxUtility)
    ->Arg(static_cast<int>(EquilibriumSet::kCeSym))
    ->Arg(static_cast<int>(EquilibriumSet::kXeSym))
    ->Arg(static_cast<int>(EquilibriumSet::kConvNashSym))
    ->Unit(benchmark::kMillisecond);

void BM_CpFactorize(benchmark::State& state) {
  const JointDistribution w = load_distribution(data("exeqsep_w2.json"));
  CpOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cp_factorize(w, opt));
}
BENCHMARK(BM_CpFactorize)->Unit(benchmark::kMillisecond);

void BM_Extendability(benchmark::State& state) {
  const JointDistribution w = load_distribution(data("uniform_2x2.json"));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extendability_lp(minority_game(), w, n));
}
BENCHMARK(BM_Extendability)->Arg(3)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_EnvelopeSimulation(benchmark::State& state) {
  const OrbitDistribution d = OrbitDistribution::iid(MixedStrategy::uniform(2), 10);
  for (auto _ : state) benchmark::DoNotOptimize(envelope_simulate(d, 0, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnvelopeSimulation)->Arg(10000);

}  // namespace
}  // namespace xeq

BENCHMARK_MAIN();
