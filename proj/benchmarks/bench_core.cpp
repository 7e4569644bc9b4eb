// Copyright 2026 The serfact Authors
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

#include "serfact/factorization.hpp"
#include "serfact/integer.hpp"
#include "serfact/lattice.hpp"

namespace {

using namespace serfact;

RingSpec spec_for(int id) {
  switch (id) {
    case 0: return RingSpec::zmod(128);
    case 1: return RingSpec::product({RingSpec::zmod(8), RingSpec::zmod(9), RingSpec::zmod(7)});
    case 2: return RingSpec::triangular(3, RingSpec::zmod(2));
    default: return RingSpec::matrix(2, RingSpec::zmod(3));
  }
}

// A fresh ring per iteration so the lattice cache is rebuilt.
void BM_LatticeIndex(benchmark::State& state) {
  const RingSpec spec = spec_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Ring r = build_ring(spec);
    benchmark::DoNotOptimize(lattice_index(r).ideals.size());
  }
  state.SetLabel(spec.to_string());
}
BENCHMARK(BM_LatticeIndex)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_FindAll(benchmark::State& state) {
  const Ring r = build_ring(spec_for(static_cast<int>(state.range(0))));
  const auto ideals = all_right_ideals(r);
  for (auto _ : state) {
    std::size_t ok = 0;
    for (const auto& a : ideals)
      if (a.is_proper() && find_serial_factorization(a).ok()) ++ok;
    benchmark::DoNotOptimize(ok);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ideals.size()));
}
BENCHMARK(BM_FindAll)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AllSerialZero(benchmark::State& state) {
  const Ring r = build_ring(RingSpec::zmod(state.range(0)));
  const RightIdeal zero = zero_ideal(r);
  for (auto _ : state) benchmark::DoNotOptimize(all_serial_factorizations(zero).size());
}
BENCHMARK(BM_AllSerialZero)->Arg(60)->Arg(210)->Arg(420)->Unit(benchmark::kMicrosecond);

void BM_FactorInt(benchmark::State& state) {
  const std::int64_t a = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(factor_int(a).parts.size());
}
BENCHMARK(BM_FactorInt)->Arg(720720)->Arg(999983)->Arg(999'983LL * 999'979LL);

void BM_DivisorLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(divisor_lattice_product_check(state.range(0)).ok());
}
BENCHMARK(BM_DivisorLattice)->Arg(5040)->Arg(720720);

}  // namespace

BENCHMARK_MAIN();
