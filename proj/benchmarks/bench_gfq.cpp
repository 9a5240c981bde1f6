/*
   Copyright 2026 The frobinc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <benchmark/benchmark.h>

#include "frobinc/subspace.hpp"

namespace frobinc {
namespace {

void BM_EnumerateSubspaces(benchmark::State& state) {
  const auto field = gfq::Field::of_order(static_cast<std::uint64_t>(state.range(0)));
  const int k = static_cast<int>(state.range(1));
  std::size_t count = 0;
  for (auto _ : state) {
    const auto subs = gfq::enumerate_subspaces(field, 4, k);
    count = subs.size();
    benchmark::DoNotOptimize(subs.data());
  }
  state.counters["subspaces"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSubspaces)->Args({4, 1})->Args({4, 2})->Args({16, 2})->Unit(benchmark::kMillisecond);

void BM_FrobeniusImage(benchmark::State& state) {
  const auto field = gfq::Field::of_order(16);
  const auto planes = gfq::enumerate_subspaces(field, 4, 2);
  for (auto _ : state) {
    for (const auto& p : planes) benchmark::DoNotOptimize(gfq::frobenius_image(p, 4));
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * planes.size()));
}
BENCHMARK(BM_FrobeniusImage)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace frobinc
