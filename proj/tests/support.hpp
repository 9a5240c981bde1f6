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
#include <cstdlib>
#include <string>

#include "frobinc/bigint.hpp"

namespace frobinc::testing {

// Seed for randomized property tests; override with FROBINC_TEST_SEED.
inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("FROBINC_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return 20260101;
}

// Number of k-dimensional subspaces of F_q^n, straight from the product formula.
inline Int qbinomial(const Int& q, int n, int k) {
  if (k < 0 || k > n) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= int_pow(q, static_cast<unsigned long>(n)) - int_pow(q, static_cast<unsigned long>(i));
    den *= int_pow(q, static_cast<unsigned long>(k)) - int_pow(q, static_cast<unsigned long>(i));
  }
  return num / den;
}

inline std::string data_path(const std::string& name) { return std::string(FROBINC_TEST_DATA_DIR) + "/" + name; }

}  // namespace frobinc::testing
