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
#include <string>

#include <gmpxx.h>

namespace frobinc {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Int int_pow(long base, unsigned long exp) { return int_pow(Int(base), exp); }

inline std::string to_string(const Int& v) { return v.get_str(); }

static_assert(sizeof(long) == 8, "LP64 platform expected");

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v) { return static_cast<std::int64_t>(v.get_si()); }

/// Returns e with base^e == value, or -1 when value is not a power of base.
inline int exact_log(std::uint64_t value, std::uint64_t base) {
  if (base < 2 || value == 0) return -1;
  int e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  return value == 1 ? e : -1;
}

}  // namespace frobinc
