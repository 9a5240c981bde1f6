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

#include "frobinc/bruteforce.hpp"
#include "frobinc/polycount.hpp"

namespace frobinc {
namespace {

void BM_Gaussian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int l = 0; l <= n; ++l) benchmark::DoNotOptimize(poly::gaussian(n, l));
  }
}
BENCHMARK(BM_Gaussian)->DenseRange(4, 16, 4);

// tau is memoized; this measures assembling N_l^c from the cached table.
void BM_CountPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(poly::count_poly(n, 2, 2));
}
BENCHMARK(BM_CountPoly)->DenseRange(5, 11, 2);

void BM_CountPoints(benchmark::State& state) {
  brute::CountOptions opt;
  opt.naive = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(brute::count_points(3, 1, 1, 2, 2, 1, opt));
}
BENCHMARK(BM_CountPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace frobinc
