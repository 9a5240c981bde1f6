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

// Integral lattices given by generators in a scaled coordinate frame, and
// the lattices N(X), N_prim(X), N_Sigma(X) and M_C attached to
// X[r,s]_1^1.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frobinc/bigint.hpp"
#include "frobinc/chow.hpp"
#include "frobinc/intmat.hpp"

namespace frobinc {

/// A lattice with basis rows in some integer coordinate frame and inner
/// product <v, w> = (v F w^T) / denom, where F is `form` (the identity when
/// empty). When `basis` is empty the lattice is known only through its Gram
/// matrix.
struct IntLattice {
  IntMatrix basis;
  Int denom = 1;
  IntMatrix form;
  IntMatrix gram;
  std::string provenance;

  int rank() const { return gram.rows(); }
  bool has_coordinates() const { return basis.cols() > 0; }
};

/// Lattice spanned by the rows of `gens` with inner product (v.w)/denom.
/// The basis is the Hermite normal form of the generators; throws
/// ConsistencyError if some Gram entry is not an integer.
IntLattice lattice_from_generators(const IntMatrix& gens, const Int& denom, std::string provenance);
/// Same, when modulus * Z^cols is known to lie in the span of `gens`.
IntLattice lattice_from_generators_mod(const IntMatrix& gens, const Int& modulus, const Int& denom,
                                       std::string provenance);
/// Gram-only lattice; throws ConsistencyError unless symmetric.
IntLattice lattice_from_gram(IntMatrix gram, std::string provenance);

/// Exact Gram matrix (B F B^T) / denom, checked integral; F empty means the
/// identity.
IntMatrix scaled_gram(const IntMatrix& basis, const Int& denom, const IntMatrix& form = {});

/// det(gram); throws DegenerateError (with the kernel dimension) when zero.
Int disc(const IntLattice& lattice);
/// All diagonal Gram entries even.
bool is_even(const IntLattice& lattice);
/// [L^vee : L] = |disc L|.
Int dual_index(const IntLattice& lattice);
/// <v, v> for a coordinate vector in the lattice's frame.
Rat norm(const IntLattice& lattice, std::span<const Int> v);
/// Membership of a coordinate vector.
bool contains(const IntLattice& lattice, std::span<const Int> v);
/// Every basis row of `sub` lies in `super` (same frame).
bool is_sublattice(const IntLattice& sub, const IntLattice& super);

/// f(n) = |P^{n-1}(F_{rs})|.
Int point_count_rs(int n, std::uint64_t r, std::uint64_t s);

/// Coordinates of Sigma_Lambda - Sigma_Lambda' in the dual basis e_P of
/// M^vee: v_S are point-incidence vectors, scaled by (-s)^{n-1-dim}.
/// Rows: for each dimension k = 1..n-1 and each Lambda other than the first
/// of that dimension, the difference against the first.
IntMatrix sigma_generators(const chow::CycleGeometry& geo);

/// Norm denominator (-s)^{n-2} of the e_P frame.
Int ep_denominator(int n, std::uint64_t s);

/// N_Sigma(X) in the e_P frame.
IntLattice build_sigma_lattice(const chow::CycleGeometry& geo);
IntLattice build_sigma_lattice(int n, std::uint64_t r, std::uint64_t s);

/// M_C = N_Sigma + s^{n-1} M^vee in the e_P frame.
IntLattice build_MC(const chow::CycleGeometry& geo);
IntLattice build_MC(int n, std::uint64_t r, std::uint64_t s);

struct NXResult {
  /// N(X) in pairing coordinates: a class x is recorded by its pairings
  /// with a fixed set of generators that form a basis over Q.
  IntLattice N;
  /// Orthogonal complement of h_1..h_{n-1} inside N(X), same frame.
  IntLattice prim;
  /// Row indices of the full generator Gram used as the reference basis.
  std::vector<int> reference;
  /// N_Sigma, expressed in the same frame, spans exactly prim.
  bool prim_equals_sigma = false;
};

/// Builds N(X) from the full pairing table of h_1..h_{n-1} and all
/// Sigma_Lambda, quotienting by the radical, then its primitive part.
NXResult build_N_and_prim(const chow::CycleGeometry& geo, unsigned threads = 1);
NXResult build_N_and_prim(int n, std::uint64_t r, std::uint64_t s, unsigned threads = 1);

/// Gram matrix text format: first line the rank, then rank rows.
std::string gram_to_text(const IntMatrix& gram);
IntMatrix parse_gram(std::istream& in);
IntMatrix parse_gram(const std::string& text);

}  // namespace frobinc
