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

#pragma once

#include <cstdint>

#include "frobinc/gfq.hpp"

namespace frobinc::brute {

inline constexpr std::uint64_t kDefaultMaxPairs = 100'000'000;

struct CountOptions {
  /// Iterate all (L, M) pairs and test the defining conditions L^r in M and
  /// L in M^s directly, instead of the closed-form count of M per L.
  bool naive = false;
  std::uint64_t max_pairs = kDefaultMaxPairs;
  std::uint64_t max_subspaces = 1'000'000;
  /// Worker threads for the outer loop; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// |X[r,s]_l^c(F_{(rs)^nu})| by exhaustive enumeration over F_{(rs)^nu}.
std::uint64_t count_points(int n, int l, int c, std::uint64_t r, std::uint64_t s, int nu,
                           const CountOptions& options = {});

/// Number of l-dimensional L over F_{q^nu} with dim(L cap L^q) = d.
std::uint64_t count_stratum(int n, int l, std::uint64_t q, int d, int nu, const CountOptions& options = {});

}  // namespace frobinc::brute
