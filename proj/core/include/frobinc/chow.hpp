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

// Intersection numbers of the cycles Sigma_Lambda on X[r,s]_l^c, and the
// pairing tables between these cycles and the classes h_i for l = c = 1.

#include <cstdint>
#include <span>
#include <vector>

#include "frobinc/bigint.hpp"
#include "frobinc/intmat.hpp"
#include "frobinc/subspace.hpp"

namespace frobinc::chow {

/// Relative position of two cycles Sigma_Lambda, Sigma_Lambda' in V = F^n:
/// m = dim(Lambda cap Lambda'), k = n - dim(Lambda + Lambda').
struct CyclePair {
  int n = 0;
  Int r = 2, s = 2;
  int m = 0;
  int k = 0;
  int l = 1, c = 1;
};

/// Reads m and k off two subspaces of the same ambient space.
CyclePair cycle_pair(const gfq::Subspace& a, const gfq::Subspace& b, const Int& r, const Int& s);

/// Coefficient of x^{m-1} y^{k-1} in
/// (1+rx+y)^{-1} (1+x+sy)^{-1} (1+x)^k (1+y)^m; zero when m or k is zero.
Int intersection_number_11(int m, int k, const Int& r, const Int& s);
Int intersection_number_11(const CyclePair& pair);

/// Degree of the intersection of two cycles with l = c: the coefficient of
/// s_{((m-l)^l)}(x) s_{((k-c)^c)}(y) in the degree kl+mc-2lc part of
///   prod_i (1+x_i)^k prod_j (1+y_j)^m / prod_{i,j} (1+r x_i+y_j)(1+x_i+s y_j).
/// Zero when m < l or k < c.
Int intersection_number_lc(int l, int m, int k, const Int& r, const Int& s);
Int intersection_number_lc(const CyclePair& pair);

// Pairings for l = c = 1.

/// (Sigma_Lambda, Sigma_{l(P)}) for a subspace of dimension `dim_lambda`.
Int sigma_point_pairing(int n, const Int& s, int dim_lambda, bool point_in_lambda);
/// (h_i, Sigma_Lambda).
Int h_sigma_pairing(int n, int i, int dim_lambda);
/// (h_i, h_j).
Int h_h_pairing(int n, int i, int j, const Int& r, const Int& s);

/// The m x m matrix with entries u on i+j=m, 1+uv on i+j=m+1, v on
/// i+j=m+2 (1-based) and t added at (m, m).
IntMatrix lemma_matrix(int m, const Int& u, const Int& v, const Int& t);
/// (-1)^{floor(m/2)} (((uv)^{m+1}-1)/(uv-1) + (-u)^{m-1} t).
Int lemma_det_closed_form(int m, const Int& u, const Int& v, const Int& t);

/// Gram matrix of h_1..h_{n-1} (the lemma matrix with u=s, v=r, t=0).
IntMatrix h_gram(int n, const Int& r, const Int& s);

/// Number of F_{rs}-points of P^{n-1}.
Int point_count(int n, const Int& q);

/// Gram matrix of h_1..h_{n-1} followed by Sigma_{l(P)} for every point
/// except the first: size n+f(n)-2. Only practical for small f(n).
IntMatrix hm0_gram(int n, const Int& r, const Int& s);
/// det of hm0_gram via its block structure; works for any f(n).
Int hm0_disc(int n, const Int& r, const Int& s);
/// (-1)^{floor((n-1)/2)} (-s)^{(n-2)(f(n)-1)}.
Int hm0_disc_closed_form(int n, const Int& r, const Int& s);

/// All F_{rs}-rational subspaces Lambda of F_{rs}^n with 1 <= dim <= n-1,
/// grouped by dimension in enumeration order, plus the points.
struct CycleGeometry {
  int n = 0;
  std::uint64_t r = 0, s = 0;
  gfq::FieldPtr field;
  /// Every cycle once, dimension-major, enumeration order within a dimension.
  std::vector<gfq::Subspace> cycles;
  /// Cycles of dimension k occupy [offset[k], offset[k+1]); k = 1..n-1.
  std::vector<std::size_t> offset;

  std::span<const gfq::Subspace> of_dim(int k) const {
    return std::span<const gfq::Subspace>(cycles).subspan(offset.at(k), offset.at(k + 1) - offset.at(k));
  }
  std::span<const gfq::Subspace> points() const { return of_dim(1); }
};

CycleGeometry make_geometry(int n, std::uint64_t r, std::uint64_t s,
                            std::uint64_t budget = gfq::kDefaultEnumerationBudget);

/// Gram matrix of the generators h_1..h_{n-1}, then Sigma_Lambda for every
/// cycle of the geometry (in its order), for l = c = 1.
IntMatrix full_gram(const CycleGeometry& geo, unsigned threads = 1);

}  // namespace frobinc::chow
