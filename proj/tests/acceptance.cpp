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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "frobinc/bruteforce.hpp"
#include "frobinc/certificate.hpp"
#include "frobinc/chow.hpp"
#include "frobinc/codes.hpp"
#include "frobinc/density.hpp"
#include "frobinc/gfq.hpp"
#include "frobinc/intmat.hpp"
#include "frobinc/lattice.hpp"
#include "frobinc/polycount.hpp"
#include "frobinc/series.hpp"
#include "frobinc/subspace.hpp"
#include "support.hpp"

using namespace frobinc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) notes << what;
    pass = pass && ok;
  }
};

bool run_criterion(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    std::ostringstream msg;
    msg << "over the " << budget_s << " s budget";
    o.require(false, msg.str());
  }
  std::printf("criterion %d: %s  %s  (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), secs,
              o.pass ? "" : "  ", o.notes.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

Int eval_count(int n, int l, int c, std::uint64_t r, std::uint64_t s, int nu) {
  const Int q = static_cast<unsigned long>(r * s);
  return poly::count_poly(n, l, c).eval(q, int_pow(q, static_cast<unsigned long>(nu)));
}

poly::IntPoly1 from_list(std::initializer_list<long> cs) {
  std::vector<Int> v;
  for (long c : cs) v.emplace_back(c);
  return poly::IntPoly1(std::move(v));
}

void criterion_counts(Outcome& o) {
  struct Case {
    int n, l, c;
    std::uint64_t r, s;
    int nu;
  };
  for (const Case& k : {Case{3, 1, 1, 2, 2, 1}, Case{3, 1, 1, 2, 2, 2}, Case{4, 1, 1, 2, 2, 1},
                        Case{3, 1, 1, 2, 4, 1}, Case{3, 1, 1, 4, 2, 1}}) {
    const auto got = brute::count_points(k.n, k.l, k.c, k.r, k.s, k.nu);
    std::ostringstream tag;
    tag << "count(" << k.n << ',' << k.l << ',' << k.c << ',' << k.r << ',' << k.s << ',' << k.nu << ")=" << got;
    o.require(Int(static_cast<unsigned long>(got)) == eval_count(k.n, k.l, k.c, k.r, k.s, k.nu), tag.str());
  }
  // N(t) = t^2 + (q^2 + q + 2) t + 1 with q = 4.
  o.require(brute::count_points(3, 1, 1, 2, 2, 1) == 16 + 22 * 4 + 1, "surface over F_4");
  o.require(brute::count_points(3, 1, 1, 2, 2, 2) == 256 + 22 * 16 + 1, "surface over F_16");
  o.require(brute::count_points(3, 1, 1, 2, 2, 1) == 105, "pinned 105");
  o.require(brute::count_points(3, 1, 1, 2, 2, 2) == 609, "pinned 609");
}

void criterion_betti(Outcome& o) {
  for (int n = 3; n <= 6; ++n) {
    for (auto [r, s] : {std::pair<std::uint64_t, std::uint64_t>{2, 2}, {2, 4}, {3, 3}, {4, 2}}) {
      const auto t = poly::betti(n, 1, 1, r, s);
      const Int q = static_cast<unsigned long>(r * s);
      const int dim = 2 * (n - 2);
      o.require(t.dim == dim, "dimension");
      for (int i = 0; i <= dim; ++i) {
        const int j = std::min(i, dim - i);
        const Int expected = j < n - 2 ? Int(j + 1) : Int(n - 2) + (int_pow(q, n) - 1) / (q - 1);
        o.require(t.values.at(i) == expected, "l = c = 1 closed form");
      }
    }
  }
  const std::vector<poly::IntPoly1> half = {
      from_list({1}),
      from_list({2}),
      from_list({5}),
      from_list({8, 1, 1, 1, 1, 1, 1}),
      from_list({12, 2, 2, 2, 2, 2, 2}),
      from_list({14, 3, 3, 3, 3, 3, 3}),
      from_list({16, 4, 5, 5, 6, 6, 6, 2, 2, 1, 1}),
  };
  for (auto [r, s] : {std::pair<std::uint64_t, std::uint64_t>{2, 2}, {3, 3}, {2, 8}}) {
    const auto t = poly::betti(7, 2, 2, r, s);
    o.require(t.dim == 12, "n = 7 dimension");
    const Int q = static_cast<unsigned long>(r * s);
    for (int i = 0; i <= 12; ++i) {
      const auto& expected = half[static_cast<std::size_t>(std::min(i, 12 - i))];
      o.require(t.symbolic.at(i) == expected, "n = 7 table entry b" + std::to_string(2 * i));
      o.require(t.values.at(i) == expected.eval(q), "n = 7 value");
    }
  }
}

void criterion_strata(Outcome& o) {
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= std::min(n, 2); ++l)
      for (std::uint64_t q : {2, 4})
        for (int nu = 1; nu <= 2; ++nu)
          for (int d = 0; d <= l; ++d) {
            const Int qq = static_cast<unsigned long>(q);
            const Int expected = poly::tau(n, l, d).eval(qq, int_pow(qq, static_cast<unsigned long>(nu)));
            const auto got = brute::count_stratum(n, l, q, d, nu);
            std::ostringstream tag;
            tag << "stratum(" << n << ',' << l << ',' << q << ',' << d << ',' << nu << ")=" << got;
            o.require(Int(static_cast<unsigned long>(got)) == expected, tag.str());
          }
}

void criterion_tau_identities(Outcome& o) {
  for (int n = 0; n <= 8; ++n)
    for (int l = 0; l <= n; ++l) {
      poly::IntPoly2 total;
      for (int d = 0; d <= l; ++d) {
        o.require(poly::tau(n, l, d) == poly::tau(n, n - l, n - 2 * l + d), "duality");
        total += poly::tau(n, l, d);
      }
      o.require(total == poly::IntPoly2::in_y(poly::gaussian(n, l)), "partition");
    }
}

void criterion_intersections(Outcome& o) {
  const auto geo = chow::make_geometry(4, 2, 2);
  for (const auto& lambda : geo.cycles)
    for (const auto& p : geo.points()) {
      const Int expected =
          lambda.contains(p) ? int_pow(Int(-2), static_cast<unsigned long>(4 - lambda.dim() - 1)) : Int(0);
      o.require(chow::intersection_number_11(chow::cycle_pair(lambda, p, 2, 2)) == expected, "point pairing");
    }
  for (int m = 3; m <= 6; ++m) {
    const int side = m + 2;
    for (int u = -side / 2; u < side - side / 2; ++u)
      for (int v = -side / 2 + 1; v <= side - side / 2; ++v)
        for (int t = -3; t < side - 3; ++t) {
          Int geometric = 0;
          for (int i = 0; i <= m; ++i) geometric += int_pow(Int(u * v), static_cast<unsigned long>(i));
          Int expected = geometric + int_pow(Int(-u), static_cast<unsigned long>(m - 1)) * t;
          if ((m / 2) % 2 == 1) expected = -expected;
          o.require(det_bareiss(chow::lemma_matrix(m, u, v, t)) == expected, "lemma determinant");
        }
  }
}

void criterion_dense_84(Outcome& o) {
  const auto geo = chow::make_geometry(4, 2, 2);
  const IntLattice sigma = build_sigma_lattice(geo);
  o.require(sigma.rank() == 84, "N_Sigma rank");
  o.require(disc(sigma) == 85 * int_pow(2, 16), "N_Sigma disc");
  o.require(is_even(sigma), "N_Sigma even");
  o.require(is_positive_definite(sigma.gram), "N_Sigma positive definite");
  const NXResult nx = build_N_and_prim(geo, 0);
  o.require(nx.N.rank() == 87, "N(X) rank");
  o.require(nx.prim.rank() == 84, "N_prim rank");
  o.require(disc(nx.prim) == 5570560, "N_prim disc");
  o.require(is_even(nx.prim), "N_prim even");
  o.require(nx.prim_equals_sigma, "N_Sigma = N_prim");
}

void criterion_dense_85(Outcome& o) {
  const auto geo = chow::make_geometry(4, 2, 2);
  const IntLattice mc = build_MC(geo);
  o.require(mc.rank() == 85, "M_C rank");
  o.require(disc(mc) == int_pow(2, 20), "M_C disc");
  o.require(is_even(mc), "M_C even");
  const auto code = codes::ChainCode::from_matrix(sigma_generators(geo), 3);
  std::vector<Int> w(85, 0);
  w[0] = 4;
  w[1] = -4;
  const auto cert = codes::certify_min_norm(mc, code, w, codes::kDefaultMaxCodeDim, 0);
  o.require(cert.valid && cert.lower_bound == 8, "certificate");
  const auto levels = codes::filtration(code);
  const auto e0 = codes::weight_enumerator_direct(levels[0]);
  o.require(e0.to_lines() == "0 1\n32 3570\n40 38080\n48 23800\n64 85\n", "Gamma_0 enumerator");
  const auto d1 = codes::dual(levels[1]);
  o.require(d1.dim() == 25, "dim of the dual of Gamma_1");
  const auto e1 = codes::macwilliams(codes::weight_enumerator_direct(d1, codes::kDefaultMaxCodeDim, 0), 25, 85);
  const std::vector<std::pair<int, const char*>> printed = {
      {0, "1"},          {8, "17850"},       {10, "45696"},   {12, "8020600"}, {14, "229785600"},
      {16, "4668633585"}, {74, "1142400"},   {76, "23800"},   {80, "357"}};
  for (const auto& [wt, c] : printed) o.require(e1.coeffs.at(wt) == Int(c), "Gamma_1 coefficient " + std::to_string(wt));
}

void criterion_densities(Outcome& o) {
  const auto d84 = density_report(84, 5570560, 8);
  const auto d85 = density_report(85, int_pow(2, 20), 8);
  const auto third = [](double v) { return std::floor(v * 1000.0 + 1e-9); };
  o.require(third(d84.log2_delta) == 30795, "log2 delta at rank 84");
  o.require(third(d84.log2_mh_bound) == 17546, "MH bound at rank 84");
  o.require(std::abs(d85.log2_delta - 32.5) < 5e-4, "log2 delta at rank 85");
  o.require(third(d85.log2_mh_bound) == 18429, "MH bound at rank 85");
}

void criterion_properties(Outcome& o) {
  std::mt19937_64 rng(testing::test_seed());

  // Frobenius commutes with sum and intersection over F_4 (n <= 3 exhaustively).
  const auto f4 = gfq::Field::get(2, 2);
  for (int n = 1; n <= 3; ++n) {
    std::vector<gfq::Subspace> all;
    for (int k = 0; k <= n; ++k) {
      auto part = gfq::enumerate_subspaces(f4, n, k);
      all.insert(all.end(), part.begin(), part.end());
    }
    for (const auto& a : all)
      for (const auto& b : all) {
        o.require(gfq::frobenius_image(gfq::sum(a, b), 2) ==
                      gfq::sum(gfq::frobenius_image(a, 2), gfq::frobenius_image(b, 2)),
                  "Frobenius and sum");
        o.require(gfq::frobenius_image(gfq::intersect(a, b), 2) ==
                      gfq::intersect(gfq::frobenius_image(a, 2), gfq::frobenius_image(b, 2)),
                  "Frobenius and intersection");
      }
  }

  // Series inversion.
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    chow::TruncSeries s = chow::TruncSeries::linear(3, 6, {Int(small(rng)), Int(small(rng)), Int(small(rng))});
    s = s * chow::TruncSeries::linear(3, 6, {Int(small(rng)), Int(small(rng)), Int(small(rng))});
    o.require(s * s.inverse() == chow::TruncSeries::constant(3, 6, 1), "series inverse");
  }

  // MacWilliams involution on random codes.
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const int length = 4 + trial % 21;
    std::vector<codes::Word> words;
    for (int g = 0; g < 1 + trial % std::min(length, 14); ++g) {
      codes::Word w = codes::make_word(length);
      for (int i = 0; i < length; ++i) codes::set_bit(w, i, bit(rng));
      words.push_back(w);
    }
    const auto c = codes::CodeF2::span(length, words);
    const auto d = codes::dual(c);
    const auto ec = codes::weight_enumerator_direct(c);
    const auto ed = codes::macwilliams(ec, c.dim(), length);
    o.require(ed == codes::weight_enumerator_direct(d), "MacWilliams against the dual");
    o.require(codes::macwilliams(ed, d.dim(), length) == ec, "MacWilliams involution");
  }

  // Gram invariants under unimodular changes of basis.
  const IntLattice sigma = build_sigma_lattice(4, 2, 2);
  const Int d = disc(sigma);
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix u = random_unimodular(sigma.rank(), rng, 200);
    const IntMatrix b = u * sigma.basis;
    const IntLattice moved = lattice_from_gram(scaled_gram(b, sigma.denom), "moved");
    o.require(disc(moved) == d, "disc under change of basis");
    o.require(is_even(moved), "evenness under change of basis");
    o.require(hnf(b) == sigma.basis, "HNF under change of basis");
  }
}

}  // namespace

int main() {
  std::printf("acceptance run, seed %llu\n", static_cast<unsigned long long>(testing::test_seed()));
  bool ok = true;
  ok &= run_criterion(1, "point counts match N_l^c at desk scale", 60, criterion_counts);
  ok &= run_criterion(2, "Betti tables (l = c = 1, n = 3..6; n = 7, l = c = 2)", 0, criterion_betti);
  ok &= run_criterion(3, "stratum counts match tau", 60, criterion_strata);
  ok &= run_criterion(4, "tau duality and partition identities, n <= 8", 0, criterion_tau_identities);
  ok &= run_criterion(5, "point pairings over F_4 and the lemma determinant", 0, criterion_intersections);
  ok &= run_criterion(6, "rank 84 lattice: disc 85*2^16, even, N_Sigma = N_prim", 300, criterion_dense_84);
  ok &= run_criterion(7, "rank 85 lattice: disc 2^20, min norm 8, enumerators", 300, criterion_dense_85);
  ok &= run_criterion(8, "center densities and Minkowski-Hlawka bounds", 0, criterion_densities);
  ok &= run_criterion(9, "property suites under a fixed seed", 0, criterion_properties);
  std::printf("%s\n", ok ? "all criteria PASS" : "some criteria FAIL");
  return ok ? 0 : 1;
}
