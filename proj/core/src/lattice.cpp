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


#include "frobinc/lattice.hpp"

#include <istream>
#include <sstream>

#include "frobinc/error.hpp"

namespace frobinc {

namespace {

Int signed_power(std::uint64_t s, int e) {
  return int_pow(-Int(static_cast<unsigned long>(s)), static_cast<unsigned long>(e));
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return acc;
}

IntLattice finish(IntMatrix basis, const Int& denom, IntMatrix form, std::string provenance) {
  IntLattice out;
  out.gram = scaled_gram(basis, denom, form);
  out.basis = std::move(basis);
  out.denom = denom;
  out.form = std::move(form);
  out.provenance = std::move(provenance);
  return out;
}

}  // namespace

IntMatrix scaled_gram(const IntMatrix& basis, const Int& denom, const IntMatrix& form) {
  if (denom == 0) throw DomainError("zero norm denominator");
  const IntMatrix left = form.rows() == 0 ? basis : basis * form;
  const int r = basis.rows();
  IntMatrix g(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = i; j < r; ++j) {
      const Int v = dot(left.row(i), basis.row(j));
      if (!mpz_divisible_p(v.get_mpz_t(), denom.get_mpz_t())) {
        throw ConsistencyError("Gram entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + v.get_str() +
                               "/" + denom.get_str() + " is not an integer");
      }
      Int q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), denom.get_mpz_t());
      g(j, i) = q;
      g(i, j) = std::move(q);
    }
  }
  return g;
}

IntLattice lattice_from_generators(const IntMatrix& gens, const Int& denom, std::string provenance) {
  return finish(hnf(gens), denom, {}, std::move(provenance));
}

IntLattice lattice_from_generators_mod(const IntMatrix& gens, const Int& modulus, const Int& denom,
                                       std::string provenance) {
  return finish(hnf_mod(gens, modulus), denom, {}, std::move(provenance));
}

IntLattice lattice_from_gram(IntMatrix gram, std::string provenance) {
  if (!gram.is_symmetric()) throw ConsistencyError("Gram matrix is not symmetric");
  IntLattice out;
  out.gram = std::move(gram);
  out.provenance = std::move(provenance);
  return out;
}

Int disc(const IntLattice& lattice) {
  Int d = det_bareiss(lattice.gram);
  if (d == 0) {
    const int kernel = lattice.rank() - exact_rank(lattice.gram);
    throw DegenerateError("Gram matrix is degenerate (kernel dimension " + std::to_string(kernel) + ")", kernel);
  }
  return d;
}

bool is_even(const IntLattice& lattice) {
  for (int i = 0; i < lattice.rank(); ++i) {
    if (mpz_odd_p(lattice.gram(i, i).get_mpz_t())) return false;
  }
  return true;
}

Int dual_index(const IntLattice& lattice) { return abs(disc(lattice)); }

Rat norm(const IntLattice& lattice, std::span<const Int> v) {
  if (!lattice.has_coordinates()) throw DomainError("lattice has no coordinate frame");
  if (static_cast<int>(v.size()) != lattice.basis.cols()) throw DimensionError("vector length does not match the frame");
  Int num;
  if (lattice.form.rows() == 0) {
    num = dot(v, v);
  } else {
    IntMatrix row(0, static_cast<int>(v.size()));
    row.append_row(v);
    const IntMatrix left = row * lattice.form;
    num = dot(left.row(0), v);
  }
  Rat out(num, lattice.denom);
  out.canonicalize();
  return out;
}

bool contains(const IntLattice& lattice, std::span<const Int> v) {
  if (!lattice.has_coordinates()) throw DomainError("lattice has no coordinate frame");
  return in_lattice(lattice.basis, v);
}

bool is_sublattice(const IntLattice& sub, const IntLattice& super) {
  for (int i = 0; i < sub.basis.rows(); ++i) {
    if (!contains(super, sub.basis.row(i))) return false;
  }
  return true;
}

Int point_count_rs(int n, std::uint64_t r, std::uint64_t s) {
  return chow::point_count(n, Int(static_cast<unsigned long>(r)) * static_cast<unsigned long>(s));
}

Int ep_denominator(int n, std::uint64_t s) { return signed_power(s, n - 2); }

IntMatrix sigma_generators(const chow::CycleGeometry& geo) {
  const auto points = geo.points();
  const int f = static_cast<int>(points.size());
  IntMatrix gens(0, f);
  for (int k = 1; k < geo.n; ++k) {
    const auto subs = geo.of_dim(k);
    const Int scale = signed_power(geo.s, geo.n - 1 - k);
    std::vector<Int> base(f, 0);
    for (int p = 0; p < f; ++p)
      if (subs[0].contains(points[p])) base[p] = 1;
    for (std::size_t i = 1; i < subs.size(); ++i) {
      std::vector<Int> v(f, 0);
      for (int p = 0; p < f; ++p) {
        const int in = subs[i].contains(points[p]) ? 1 : 0;
        v[p] = scale * (in - base[p]);
      }
      gens.append_row(v);
    }
  }
  return gens;
}

IntLattice build_sigma_lattice(const chow::CycleGeometry& geo) {
  return lattice_from_generators(sigma_generators(geo), ep_denominator(geo.n, geo.s), "N_Sigma");
}

IntLattice build_sigma_lattice(int n, std::uint64_t r, std::uint64_t s) {
  return build_sigma_lattice(chow::make_geometry(n, r, s));
}

IntLattice build_MC(const chow::CycleGeometry& geo) {
  const Int modulus = int_pow(Int(static_cast<unsigned long>(geo.s)), static_cast<unsigned long>(geo.n - 1));
  return lattice_from_generators_mod(sigma_generators(geo), modulus, ep_denominator(geo.n, geo.s), "M_C");
}

IntLattice build_MC(int n, std::uint64_t r, std::uint64_t s) { return build_MC(chow::make_geometry(n, r, s)); }

NXResult build_N_and_prim(const chow::CycleGeometry& geo, unsigned threads) {
  const int n = geo.n;
  const int hs = n - 1;
  const IntMatrix G = chow::full_gram(geo, threads);
  NXResult out;
  out.reference = row_basis_indices(G);
  const int b = static_cast<int>(out.reference.size());
  const IntMatrix GII = G.principal(out.reference);
  const Int D = det_bareiss(GII);
  if (D == 0) throw ConsistencyError("reference generators are dependent over Q");

  // Pairing coordinates of every generator.
  IntMatrix C(G.rows(), b);
  for (int g = 0; g < G.rows(); ++g)
    for (int j = 0; j < b; ++j) C(g, j) = G(g, out.reference[j]);

  // adj(G_II) = D * G_II^{-1}; the form on pairing coordinates is adj / D.
  const auto inv = solve_rational(GII, IntMatrix::identity(b));
  IntMatrix adj(b, b);
  for (int i = 0; i < b; ++i) {
    for (int j = 0; j < b; ++j) {
      Rat v = inv[i][j] * D;
      v.canonicalize();
      if (v.get_den() != 1) throw ConsistencyError("adjugate entry is not an integer");
      adj(i, j) = v.get_num();
    }
  }

  out.N = finish(hnf_mod(C, abs(D)), D, adj, "N(X)");

  // Pairings of the N(X) basis with h_1..h_{n-1}.
  IntMatrix W(b, hs);
  for (int i = 0; i < hs; ++i) {
    const auto w = solve_in_lattice(out.N.basis, C.row(i));
    if (!w) throw ConsistencyError("h class is not in N(X)");
    for (int j = 0; j < b; ++j) W(j, i) = (*w)[j];
  }
  const IntMatrix K = integer_kernel(out.N.gram * W);
  out.prim = finish(hnf(K * out.N.basis), D, adj, "N_prim(X)");

  IntMatrix diffs(0, b);
  for (int k = 1; k < n; ++k) {
    const int base = hs + static_cast<int>(geo.offset[k]);
    for (int g = base + 1; g < hs + static_cast<int>(geo.offset[k + 1]); ++g) {
      std::vector<Int> v(b);
      for (int j = 0; j < b; ++j) v[j] = C(g, j) - C(base, j);
      diffs.append_row(v);
    }
  }
  out.prim_equals_sigma = hnf(diffs) == out.prim.basis;
  return out;
}

NXResult build_N_and_prim(int n, std::uint64_t r, std::uint64_t s, unsigned threads) {
  return build_N_and_prim(chow::make_geometry(n, r, s), threads);
}

std::string gram_to_text(const IntMatrix& gram) {
  std::ostringstream os;
  os << gram.rows() << '\n' << to_text(gram);
  return os.str();
}

IntMatrix parse_gram(std::istream& in) {
  long long rank = -1;
  if (!(in >> rank) || rank < 0) throw DomainError("Gram file must start with the rank");
  const int r = static_cast<int>(rank);
  IntMatrix g(r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::string tok;
      if (!(in >> tok)) throw DomainError("Gram file ended early");
      if (g(i, j).set_str(tok, 10) != 0) throw DomainError("bad Gram entry '" + tok + "'");
    }
  }
  if (!g.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
  return g;
}

IntMatrix parse_gram(const std::string& text) {
  std::istringstream in(text);
  return parse_gram(in);
}

}  // namespace frobinc
