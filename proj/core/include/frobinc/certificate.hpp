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

// Certified minimal norm for a lattice L with Z^m scaled by 1/denom,
// L = pullback of a code C over Z/2^e: a nonzero w in L either has a
// nonzero image in some Gamma_nu (so at least d_nu coordinates of absolute
// value >= 2^nu) or is divisible by 2^e.

#include <string>
#include <vector>

#include "frobinc/codes.hpp"
#include "frobinc/lattice.hpp"

namespace frobinc::codes {

struct CertificateBranch {
  /// nu for a filtration level; e for the "divisible by 2^e" branch.
  int level = 0;
  int code_dim = 0;
  /// "direct", "dual" (enumerate the dual, then MacWilliams), "zero" (the
  /// code is {0}, branch vacuous) or "divisible".
  std::string route;
  /// Minimal nonzero weight of Gamma_nu; 1 for the divisible branch; -1
  /// when vacuous.
  int min_weight = -1;
  /// min_weight * 4^nu / denom.
  Rat norm_bound;
  /// Enumerator the bound was read from (Gamma_nu's own).
  WeightEnum enumerator;
};

struct MinNormCertificate {
  int length = 0;
  int exponent = 0;
  Int denom;
  std::vector<CertificateBranch> branches;
  /// The top filtration level equals the even-weight code.
  bool top_level_even_weight = false;
  /// The lattice basis reduces into the code and contains 2^e Z^m.
  bool lattice_matches_code = false;
  std::vector<Int> witness;
  bool witness_in_lattice = false;
  Rat witness_norm;
  Rat lower_bound;
  /// lower_bound == witness_norm and all consistency checks passed.
  bool valid = false;
};

/// Builds the certificate. The lattice must use the plain scaled frame
/// (no form matrix, positive denominator).
MinNormCertificate certify_min_norm(const IntLattice& lattice, const ChainCode& code, std::vector<Int> witness,
                                    int max_code_dim = kDefaultMaxCodeDim, unsigned threads = 1);

}  // namespace frobinc::codes
