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


#include "cli/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "frobinc/bruteforce.hpp"
#include "frobinc/certificate.hpp"
#include "frobinc/chow.hpp"
#include "frobinc/codes.hpp"
#include "frobinc/density.hpp"
#include "frobinc/lattice.hpp"
#include "frobinc/polycount.hpp"

namespace frobinc::cli {

namespace {

using poly::IntPoly1;

template <typename A, typename B>
void expect_eq(Report& r, std::string name, const A& expected, const B& computed) {
  std::ostringstream e, c;
  e << expected;
  c << computed;
  r.checks.push_back({std::move(name), e.str(), c.str(), e.str() == c.str()});
}

void expect_true(Report& r, std::string name, bool value) {
  r.checks.push_back({std::move(name), "true", value ? "true" : "false", value});
}

void expect_near(Report& r, std::string name, double expected, double computed, double tol) {
  char e[64], c[64];
  std::snprintf(e, sizeof e, "%.3f", expected);
  std::snprintf(c, sizeof c, "%.6f", computed);
  r.checks.push_back({std::move(name), e, c, std::fabs(expected - computed) < tol});
}

IntPoly1 poly_of(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly1(std::move(c));
}

Report k3_surface(const Config& cfg) {
  Report r{"k3-surface", {}};
  brute::CountOptions fast;
  fast.max_pairs = cfg.max_pairs;
  fast.threads = cfg.threads;
  brute::CountOptions naive = fast;
  naive.naive = true;
  const Int q = 4;
  for (int nu = 1; nu <= 2; ++nu) {
    const Int t = int_pow(q, static_cast<unsigned long>(nu));
    const Int expected = t * t + (q * q + q + 2) * t + 1;
    const std::string tag = "[nu=" + std::to_string(nu) + "]";
    expect_eq(r, "count" + tag, expected, brute::count_points(3, 1, 1, 2, 2, nu, fast));
    expect_eq(r, "count_naive" + tag, expected, brute::count_points(3, 1, 1, 2, 2, nu, naive));
    expect_eq(r, "count_poly" + tag, expected, poly::count_poly(3, 1, 1).eval(q, t));
  }
  const auto b = poly::betti(3, 1, 1, 2, 2);
  expect_eq(r, "b2", q * q + q + 2, b.values.at(1));
  return r;
}

Report betti_n7(const Config&) {
  Report r{"betti-n7", {}};
  const std::vector<IntPoly1> half = {
      poly_of({1}),
      poly_of({2}),
      poly_of({5}),
      poly_of({8, 1, 1, 1, 1, 1, 1}),
      poly_of({12, 2, 2, 2, 2, 2, 2}),
      poly_of({14, 3, 3, 3, 3, 3, 3}),
      poly_of({16, 4, 5, 5, 6, 6, 6, 2, 2, 1, 1}),
  };
  const auto table = poly::betti(7, 2, 2, 2, 2);
  expect_eq(r, "dim", 12, table.dim);
  for (int i = 0; i <= 12; ++i) {
    const IntPoly1& expected = half[static_cast<std::size_t>(i <= 6 ? i : 12 - i)];
    expect_eq(r, "b" + std::to_string(2 * i), expected.to_string("q"), table.symbolic.at(i).to_string("q"));
  }
  return r;
}

std::vector<Int> norm8_witness(const chow::CycleGeometry& geo) {
  const int f = static_cast<int>(geo.points().size());
  std::vector<Int> w(f, 0);
  const Int scale = int_pow(Int(static_cast<unsigned long>(geo.s)), static_cast<unsigned long>(geo.n - 2));
  w[0] = scale;
  w[1] = -scale;
  return w;
}

codes::MinNormCertificate certify_mc(const chow::CycleGeometry& geo, const IntLattice& mc, const Config& cfg) {
  const auto code = codes::ChainCode::from_matrix(sigma_generators(geo), 3);
  return codes::certify_min_norm(mc, code, norm8_witness(geo), cfg.max_code_dim, cfg.threads);
}

Report dense_84(const Config& cfg) {
  Report r{"dense-84", {}};
  const auto geo = chow::make_geometry(4, 2, 2);
  const IntLattice sigma = build_sigma_lattice(geo);
  expect_eq(r, "N_Sigma.rank", 84, sigma.rank());
  expect_eq(r, "N_Sigma.disc", 5570560, disc(sigma));
  expect_true(r, "N_Sigma.even", is_even(sigma));
  expect_true(r, "N_Sigma.positive_definite", is_positive_definite(sigma.gram));

  const NXResult nx = build_N_and_prim(geo, cfg.threads);
  expect_eq(r, "N(X).rank", 87, nx.N.rank());
  expect_eq(r, "N_prim.rank", 84, nx.prim.rank());
  expect_eq(r, "N_prim.disc", 5570560, disc(nx.prim));
  expect_true(r, "N_prim.even", is_even(nx.prim));
  expect_true(r, "N_Sigma=N_prim", nx.prim_equals_sigma);

  const auto witness = norm8_witness(geo);
  expect_true(r, "witness.in_N_Sigma", contains(sigma, witness));
  expect_eq(r, "witness.norm", 8, norm(sigma, witness));
  const IntLattice mc = build_MC(geo);
  expect_true(r, "N_Sigma<=M_C", is_sublattice(sigma, mc));
  const auto cert = certify_mc(geo, mc, cfg);
  expect_true(r, "certificate.valid", cert.valid);
  expect_eq(r, "min_norm", 8, cert.lower_bound);

  const auto dens = density_report(84, disc(sigma), 8);
  expect_near(r, "log2_delta", 30.795, dens.log2_delta, 5e-4);
  expect_near(r, "log2_mh_bound", 17.546, dens.log2_mh_bound, 5e-4);
  return r;
}

Report dense_85(const Config& cfg) {
  Report r{"dense-85", {}};
  const auto geo = chow::make_geometry(4, 2, 2);
  const IntLattice mc = build_MC(geo);
  expect_eq(r, "M_C.rank", 85, mc.rank());
  expect_eq(r, "M_C.disc", 1048576, disc(mc));
  expect_true(r, "M_C.even", is_even(mc));

  const auto code = codes::ChainCode::from_matrix(sigma_generators(geo), 3);
  const auto levels = codes::filtration(code);
  expect_eq(r, "Gamma0.dim", 16, levels[0].dim());
  expect_eq(r, "Gamma1.dim", 60, levels[1].dim());
  expect_eq(r, "Gamma2.dim", 84, levels[2].dim());
  expect_eq(r, "log2|C|", levels[0].dim() + levels[1].dim() + levels[2].dim(), code.log2_size());
  expect_true(r, "Gamma2=even_weight", levels[2] == codes::even_weight_code(85));

  const auto e0 = codes::weight_enumerator_direct(levels[0], cfg.max_code_dim, cfg.threads);
  expect_eq(r, "Gamma0.enumerator", "0 1|32 3570|40 38080|48 23800|64 85|", [&] {
    std::string s = e0.to_lines();
    for (auto& ch : s)
      if (ch == '\n') ch = '|';
    return s;
  }());
  const auto dual1 = codes::dual(levels[1]);
  expect_eq(r, "Gamma1_dual.dim", 25, dual1.dim());
  const auto e1 = codes::macwilliams(codes::weight_enumerator_direct(dual1, cfg.max_code_dim, cfg.threads), 25, 85);
  const std::vector<std::pair<int, long>> printed = {{0, 1},          {8, 17850},         {10, 45696},
                                                     {12, 8020600},   {14, 229785600},    {16, 4668633585},
                                                     {74, 1142400},   {76, 23800},        {80, 357}};
  for (const auto& [w, c] : printed) expect_eq(r, "Gamma1.A" + std::to_string(w), c, e1.coeffs.at(w));

  const auto cert = certify_mc(geo, mc, cfg);
  expect_true(r, "certificate.valid", cert.valid);
  expect_eq(r, "min_norm", 8, cert.lower_bound);
  const auto dens = density_report(85, disc(mc), 8);
  expect_near(r, "log2_delta", 32.5, dens.log2_delta, 5e-4);
  expect_near(r, "log2_mh_bound", 18.429, dens.log2_mh_bound, 5e-4);
  return r;
}

}  // namespace

bool Report::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> targets = {"k3-surface", "betti-n7", "dense-84", "dense-85"};
  return targets;
}

Report reproduce(const std::string& target, const Config& config) {
  if (target == "k3-surface") return k3_surface(config);
  if (target == "betti-n7") return betti_n7(config);
  if (target == "dense-84") return dense_84(config);
  if (target == "dense-85") return dense_85(config);
  throw std::invalid_argument("unknown reproduce target '" + target + "'");
}

}  // namespace frobinc::cli
