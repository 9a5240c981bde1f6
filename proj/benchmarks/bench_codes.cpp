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

#include "frobinc/codes.hpp"

namespace frobinc {
namespace {

codes::CodeF2 random_code(int length, int dim) {
  std::mt19937_64 rng(7);
  std::vector<codes::Word> words;
  while (static_cast<int>(words.size()) < dim) {
    codes::Word w = codes::make_word(length);
    for (auto& x : w) x = rng();
    if (length % 64) w.back() &= (std::uint64_t{1} << (length % 64)) - 1;
    words.push_back(w);
  }
  return codes::CodeF2::span(length, words);
}

void BM_GrayCodeEnumeration(benchmark::State& state) {
  const auto code = random_code(85, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(codes::weight_enumerator_direct(code, 26, 1));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) << code.dim());
}
BENCHMARK(BM_GrayCodeEnumeration)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_MacWilliams(benchmark::State& state) {
  const auto code = random_code(85, 16);
  const auto e = codes::weight_enumerator_direct(code);
  for (auto _ : state) benchmark::DoNotOptimize(codes::macwilliams(e, code.dim(), 85));
}
BENCHMARK(BM_MacWilliams)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace frobinc
