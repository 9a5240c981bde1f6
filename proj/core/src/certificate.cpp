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


#include "frobinc/certificate.hpp"

#include "frobinc/error.hpp"

namespace frobinc::codes {

namespace {

CertificateBranch level_branch(const CodeF2& gamma, int nu, const Int& denom, int max_code_dim, unsigned threads) {
  CertificateBranch b;
  b.level = nu;
  b.code_dim = gamma.dim();
  const int n = gamma.length();
  if (gamma.dim() == 0) {
    b.route = "zero";
    b.enumerator.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    b.enumerator.coeffs[0] = 1;
    return b;
  }
  if (gamma.dim() <= max_code_dim) {
    b.route = "direct";
    b.enumerator = weight_enumerator_direct(gamma, max_code_dim, threads);
  } else if (n - gamma.dim() <= max_code_dim) {
    b.route = "dual";
    const CodeF2 d = dual(gamma);
    b.enumerator = macwilliams(weight_enumerator_direct(d, max_code_dim, threads), d.dim(), n);
  } else {
    throw CapacityError("level " + std::to_string(nu) + " has dimension " + std::to_string(gamma.dim()) +
                        " and codimension " + std::to_string(n - gamma.dim()) + ", both above the budget " +
                        std::to_string(max_code_dim));
  }
  if (b.enumerator.total() != int_pow(2, static_cast<unsigned long>(gamma.dim()))) {
    throw ConsistencyError("weight enumerator of level " + std::to_string(nu) + " has the wrong total");
  }
  b.min_weight = b.enumerator.min_nonzero_weight();
  b.norm_bound = Rat(Int(b.min_weight) * int_pow(4, static_cast<unsigned long>(nu)), denom);
  b.norm_bound.canonicalize();
  return b;
}

}  // namespace

MinNormCertificate certify_min_norm(const IntLattice& lattice, const ChainCode& code, std::vector<Int> witness,
                                    int max_code_dim, unsigned threads) {
  if (!lattice.has_coordinates() || lattice.form.rows() != 0 || lattice.denom <= 0) {
    throw DomainError("certificate needs a lattice in a positively scaled coordinate frame");
  }
  if (lattice.basis.cols() != code.length()) throw DimensionError("lattice and code lengths differ");
  MinNormCertificate cert;
  cert.length = code.length();
  cert.exponent = code.exponent();
  cert.denom = lattice.denom;

  const auto levels = filtration(code);
  for (int nu = 0; nu < code.exponent(); ++nu) {
    cert.branches.push_back(level_branch(levels[nu], nu, lattice.denom, max_code_dim, threads));
  }
  cert.top_level_even_weight = levels.back() == even_weight_code(code.length());

  CertificateBranch divisible;
  divisible.level = code.exponent();
  divisible.route = "divisible";
  divisible.min_weight = 1;
  divisible.norm_bound = Rat(int_pow(4, static_cast<unsigned long>(code.exponent())), lattice.denom);
  divisible.norm_bound.canonicalize();
  cert.branches.push_back(divisible);

  bool first = true;
  for (const auto& b : cert.branches) {
    if (b.min_weight < 0) continue;
    if (first || b.norm_bound < cert.lower_bound) cert.lower_bound = b.norm_bound;
    first = false;
  }

  bool matches = true;
  for (int i = 0; i < lattice.basis.rows() && matches; ++i) matches = code.contains(lattice.basis.row(i));
  const Int scale = int_pow(2, static_cast<unsigned long>(code.exponent()));
  for (int j = 0; j < code.length() && matches; ++j) {
    std::vector<Int> e(code.length(), 0);
    e[j] = scale;
    matches = contains(lattice, e);
  }
  // Every code generator must lift into the lattice.
  for (const auto& row : code.form().rows) {
    if (!matches) break;
    std::vector<Int> v(row.begin(), row.end());
    matches = contains(lattice, v);
  }
  cert.lattice_matches_code = matches;

  cert.witness = std::move(witness);
  cert.witness_in_lattice = static_cast<int>(cert.witness.size()) == code.length() && contains(lattice, cert.witness);
  bool nonzero = false;
  for (const auto& x : cert.witness) nonzero = nonzero || x != 0;
  if (cert.witness_in_lattice) cert.witness_norm = norm(lattice, cert.witness);
  cert.valid = cert.lattice_matches_code && cert.witness_in_lattice && nonzero && cert.witness_norm == cert.lower_bound;
  return cert;
}

}  // namespace frobinc::codes
