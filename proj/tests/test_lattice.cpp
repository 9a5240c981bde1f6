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


#include <doctest.h>

#include <random>

#include "frobinc/chow.hpp"
#include "frobinc/error.hpp"
#include "frobinc/intmat.hpp"
#include "frobinc/lattice.hpp"
#include "support.hpp"

using namespace frobinc;

namespace {

const chow::CycleGeometry& geometry_4() {
  static const auto geo = chow::make_geometry(4, 2, 2);
  return geo;
}

const IntLattice& sigma_84() {
  static const IntLattice l = build_sigma_lattice(geometry_4());
  return l;
}

std::vector<Int> point_difference(int f, int a, int b, const Int& scale) {
  std::vector<Int> v(f, 0);
  v[a] = scale;
  v[b] = -scale;
  return v;
}

}  // namespace

TEST_CASE("frame constants") {
  CHECK(point_count_rs(4, 2, 2) == 85);
  CHECK(point_count_rs(3, 2, 2) == 21);
  CHECK(ep_denominator(4, 2) == 4);
  CHECK(ep_denominator(3, 2) == -2);
}

TEST_CASE("the rank 84 lattice spanned by cycle differences") {
  const IntLattice& l = sigma_84();
  CHECK(l.rank() == 84);
  CHECK(disc(l) == 85 * int_pow(2, 16));
  CHECK(disc(l) == 5570560);
  CHECK(is_even(l));
  CHECK(is_positive_definite(l.gram));
  CHECK(l.gram.is_symmetric());
  const auto w = point_difference(85, 0, 1, 4);
  CHECK(contains(l, w));
  CHECK(norm(l, w) == 8);
}

TEST_CASE("the rank 85 lattice M_C") {
  const IntLattice mc = build_MC(geometry_4());
  CHECK(mc.rank() == 85);
  CHECK(disc(mc) == int_pow(2, 20));
  CHECK(is_even(mc));
  CHECK(is_sublattice(sigma_84(), mc));
  CHECK_FALSE(is_sublattice(mc, sigma_84()));
  // 8 e_P lies in M_C and has norm 16.
  std::vector<Int> v(85, 0);
  v[7] = 8;
  CHECK(contains(mc, v));
  CHECK(norm(mc, v) == 16);
  CHECK(dual_index(mc) == int_pow(2, 20));
}

TEST_CASE("numerical Neron-Severi lattice and its primitive part") {
  const NXResult nx = build_N_and_prim(geometry_4(), 2);
  CHECK(nx.N.rank() == 87);
  CHECK(nx.prim.rank() == 84);
  CHECK(disc(nx.prim) == 5570560);
  CHECK(is_even(nx.prim));
  CHECK(nx.prim_equals_sigma);
  CHECK(nx.reference.size() == 87);
}

TEST_CASE("points of the projective plane over F_4") {
  // Differences Sigma_P - Sigma_P0 pair as 2(-s)^{n-2} on the diagonal and
  // (-s)^{n-2} off it.
  const auto geo = chow::make_geometry(3, 2, 2);
  const IntMatrix g = chow::full_gram(geo);
  const int off = 2 + static_cast<int>(geo.offset[1]);
  const int f = static_cast<int>(geo.points().size());
  REQUIRE(f == 21);
  for (int a = 1; a < f; ++a)
    for (int b = 1; b < f; ++b) {
      const Int v = g(off + a, off + b) - g(off + a, off) - g(off, off + b) + g(off, off);
      CHECK(v == (a == b ? Int(-4) : Int(-2)));
    }
  const IntLattice l = build_sigma_lattice(geo);
  CHECK(l.rank() == 20);
  const NXResult nx = build_N_and_prim(geo);
  CHECK(nx.N.rank() == 1 + 21);
  CHECK(nx.prim.rank() == 20);
  CHECK(disc(nx.prim) == disc(l));
  CHECK(nx.prim_equals_sigma);
}

TEST_CASE("Gram invariants survive unimodular changes of basis") {
  const IntLattice& l = sigma_84();
  const Int d = disc(l);
  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix u = random_unimodular(l.rank(), rng, 200);
    const IntMatrix b = u * l.basis;
    const IntMatrix g = scaled_gram(b, l.denom);
    CHECK(g == u * l.gram * u.transpose());
    const IntLattice moved = lattice_from_gram(g, "moved");
    CHECK(disc(moved) == d);
    CHECK(is_even(moved));
    CHECK(hnf(b) == l.basis);
  }
}

TEST_CASE("lattices from Gram matrices") {
  IntMatrix diag(85, 85);
  for (int i = 0; i < 85; ++i) diag(i, i) = 4;
  const IntLattice m = lattice_from_gram(diag, "4I");
  CHECK(disc(m) == int_pow(4, 85));
  CHECK(is_even(m));

  const IntMatrix a2 = IntMatrix::from_rows({{2, -1}, {-1, 2}}, 2);
  CHECK(parse_gram(gram_to_text(a2)) == a2);
  const IntLattice l = lattice_from_gram(a2, "A2");
  CHECK(disc(l) == 3);
  CHECK(dual_index(l) == 3);
  CHECK_THROWS_AS(norm(l, std::vector<Int>{1, 1}), DomainError);

  const IntLattice flat = lattice_from_gram(IntMatrix::from_rows({{1, 1}, {1, 1}}, 2), "flat");
  try {
    (void)disc(flat);
    FAIL("expected a degenerate lattice");
  } catch (const DegenerateError& e) {
    CHECK(e.kernel_dim() == 1);
  }
  CHECK_THROWS_AS(parse_gram("2\n1 2\n3 4\n"), DomainError);
  CHECK_THROWS_AS(lattice_from_gram(IntMatrix::from_rows({{1, 2}, {3, 4}}, 2), "asym"), ConsistencyError);
  CHECK_THROWS_AS(scaled_gram(IntMatrix::from_rows({{1, 0}}, 2), 2), ConsistencyError);
}
