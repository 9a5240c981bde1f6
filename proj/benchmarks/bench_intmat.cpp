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

#include <random>

#include "frobinc/intmat.hpp"

namespace frobinc {
namespace {

IntMatrix random_matrix(int rows, int cols, int spread, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-spread, spread);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_Bareiss(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix m = random_matrix(n, n, 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_Bareiss)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

void BM_Hnf(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix gens = random_matrix(n + n / 2, n, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(gens));
}
BENCHMARK(BM_Hnf)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace frobinc
