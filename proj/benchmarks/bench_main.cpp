// Copyright 2026 The pbtsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "pbtsim/ad_study.hpp"
#include "pbtsim/channels.hpp"
#include "pbtsim/distances.hpp"
#include "pbtsim/kraus.hpp"
#include "pbtsim/oracle.hpp"
#include "pbtsim/spin_basis.hpp"

namespace {

using namespace pbtsim;

void BM_BuildSpinBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_spin_basis(n));
}
BENCHMARK(BM_BuildSpinBasis)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_PbtChoi(benchmark::State& state) {
  const ReducedResource r = make_family(AdChoiFamily{0.3}, static_cast<int>(state.range(0)));
  cached_spin_basis(r.n);
  for (auto _ : state) benchmark::DoNotOptimize(pbt_choi(r));
}
BENCHMARK(BM_PbtChoi)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_MakeFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_family(AlternateFamily{0.7}, n));
}
BENCHMARK(BM_MakeFamily)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_OracleChoi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ReducedResource r = make_family(BellFamily{}, n);
  for (auto _ : state) {
    const DensePovm povm = build_povm(n);
    benchmark::DoNotOptimize(oracle_choi(povm, r));
  }
}
BENCHMARK(BM_OracleChoi)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ProtocolKraus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(protocol_kraus(n));
}
BENCHMARK(BM_ProtocolKraus)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

void BM_DiamondNumeric(benchmark::State& state) {
  const ChoiMatrix x = pbt_ad_closed_form(4, 0.2);
  const ChoiMatrix y = ad_choi(0.36, AdConvention::kPlusBell);
  DiamondOptions opts;
  opts.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(diamond_numeric(x, y, opts));
}
BENCHMARK(BM_DiamondNumeric)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_AlternateXyz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(alternate_xyz(n, 0.63));
}
BENCHMARK(BM_AlternateXyz)->Arg(4)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
