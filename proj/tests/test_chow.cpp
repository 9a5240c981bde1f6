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

#include <array>
#include <map>

#include "frobinc/chow.hpp"
#include "frobinc/intmat.hpp"
#include "frobinc/series.hpp"
#include "frobinc/subspace.hpp"
#include "support.hpp"

using namespace frobinc;
using namespace frobinc::chow;

namespace {

// Dense two-variable series truncated per variable: a[i][j] is the
// coefficient of x^i y^j for i <= dx, j <= dy.
struct Dense2 {
  int dx, dy;
  std::vector<std::vector<Int>> a;
  Dense2(int x, int y) : dx(x), dy(y), a(x + 1, std::vector<Int>(y + 1, 0)) {}
  Dense2 operator*(const Dense2& o) const {
    Dense2 out(dx, dy);
    for (int i = 0; i <= dx; ++i)
      for (int j = 0; j <= dy; ++j)
        for (int p = 0; p + i <= dx; ++p)
          for (int q = 0; q + j <= dy; ++q) out.a[i + p][j + q] += a[i][j] * o.a[p][q];
    return out;
  }
};

// (1 + u x + v y)^e for e >= 0, or its inverse for e = -1.
Dense2 linear_power(int dx, int dy, const Int& u, const Int& v, int e) {
  Dense2 base(dx, dy);
  base.a[0][0] = 1;
  Dense2 lin(dx, dy);
  if (dx > 0) lin.a[1][0] = e < 0 ? Int(-u) : u;
  if (dy > 0) lin.a[0][1] = e < 0 ? Int(-v) : v;
  const int terms = e < 0 ? dx + dy : e;
  Dense2 out = base, pw = base;
  for (int t = 1; t <= terms; ++t) {
    pw = pw * lin;
    Int binom = 1;
    if (e >= 0) {
      binom = 1;
      for (int i = 0; i < t; ++i) binom = binom * (e - i) / (i + 1);
    }
    for (int i = 0; i <= dx; ++i)
      for (int j = 0; j <= dy; ++j) out.a[i][j] += binom * pw.a[i][j];
  }
  return out;
}

Int dense_coefficient_oracle(int m, int k, const Int& r, const Int& s) {
  if (m <= 0 || k <= 0) return 0;
  const int dx = m - 1, dy = k - 1;
  const Dense2 f = linear_power(dx, dy, r, 1, -1) * linear_power(dx, dy, 1, s, -1) *
                   linear_power(dx, dy, 1, 0, k) * linear_power(dx, dy, 0, 1, m);
  return f.a[dx][dy];
}

// Four-variable polynomials (x1, x2, y1, y2) truncated at a total degree.
using Mono = std::array<int, 4>;
using Poly4 = std::map<Mono, Int>;

Poly4 mul(const Poly4& a, const Poly4& b, int bound) {
  Poly4 out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Mono e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      if (e[0] + e[1] + e[2] + e[3] > bound) continue;
      out[e] += ca * cb;
    }
  return out;
}

Poly4 affine(const std::array<Int, 4>& c) {
  Poly4 p;
  p[{0, 0, 0, 0}] = 1;
  for (int i = 0; i < 4; ++i)
    if (c[i] != 0) p[Mono{i == 0, i == 1, i == 2, i == 3}] = c[i];
  return p;
}

Poly4 inverse_affine(const std::array<Int, 4>& c, int bound) {
  std::array<Int, 4> neg;
  for (int i = 0; i < 4; ++i) neg[i] = -c[i];
  Poly4 lin = affine(neg);
  lin.erase({0, 0, 0, 0});
  Poly4 out, pw;
  out[{0, 0, 0, 0}] = 1;
  pw = out;
  for (int t = 1; t <= bound; ++t) {
    pw = mul(pw, lin, bound);
    for (const auto& [e, v] : pw) out[e] += v;
  }
  return out;
}

// Degree of the l = c = 2 intersection by the Grassmannian integral
//   int_{G(2,m)} p = -(1/2) [x1^{m-1} x2^{m-1}] p * prod_{i != j}(x_i - x_j),
// applied to both variable groups.
Int grassmannian_integral_oracle(int m, int k, const Int& r, const Int& s) {
  if (m < 2 || k < 2) return 0;
  const int d = 2 * k + 2 * m - 8;
  Poly4 f;
  f[{0, 0, 0, 0}] = 1;
  for (int i = 0; i < 2; ++i) {
    std::array<Int, 4> xi{0, 0, 0, 0};
    xi[i] = 1;
    for (int t = 0; t < k; ++t) f = mul(f, affine(xi), d);
    std::array<Int, 4> yi{0, 0, 0, 0};
    yi[2 + i] = 1;
    for (int t = 0; t < m; ++t) f = mul(f, affine(yi), d);
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::array<Int, 4> a{0, 0, 0, 0}, b{0, 0, 0, 0};
      a[i] = r;
      a[2 + j] = 1;
      b[i] = 1;
      b[2 + j] = s;
      f = mul(f, inverse_affine(a, d), d);
      f = mul(f, inverse_affine(b, d), d);
    }
  Poly4 top;
  for (const auto& [e, v] : f)
    if (e[0] + e[1] + e[2] + e[3] == d) top[e] = v;
  // prod_{i != j}(x_i - x_j) = -(x1 - x2)^2, and likewise for y.
  Poly4 vx, vy;
  vx[{2, 0, 0, 0}] = -1;
  vx[{1, 1, 0, 0}] = 2;
  vx[{0, 2, 0, 0}] = -1;
  vy[{0, 0, 2, 0}] = -1;
  vy[{0, 0, 1, 1}] = 2;
  vy[{0, 0, 0, 2}] = -1;
  const Poly4 full = mul(mul(top, vx, d + 4), vy, d + 4);
  auto it = full.find({m - 1, m - 1, k - 1, k - 1});
  const Int raw = it == full.end() ? Int(0) : it->second;
  REQUIRE(raw % 4 == 0);
  return raw / 4;
}

Int det_closed_form(int m, const Int& u, const Int& v, const Int& t) {
  Int geometric = 0;
  for (int i = 0; i <= m; ++i) geometric += int_pow(u * v, static_cast<unsigned long>(i));
  const Int sign = (m / 2) % 2 == 0 ? 1 : -1;
  return sign * (geometric + int_pow(Int(-u), static_cast<unsigned long>(m - 1)) * t);
}

}  // namespace

TEST_CASE("truncated series inverse") {
  const TruncSeries a = TruncSeries::linear(2, 5, {Int(3), Int(-2)});
  const TruncSeries one = TruncSeries::constant(2, 5, 1);
  CHECK(a * a.inverse() == one);
  const TruncSeries b = a.pow(3) + TruncSeries::linear(2, 5, {Int(1), Int(7)}) * a;
  const TruncSeries c = b - TruncSeries::constant(2, 5, 1);  // constant term 1
  CHECK(c * c.inverse() == one);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a.inverse().coeff({4, 0}) == 81);
  CHECK(a.inverse().coeff({0, 3}) == 8);
}

TEST_CASE("l = c = 1 coefficients against a dense oracle") {
  for (long r : {1, 2, 3, 4})
    for (long s : {1, 2, 3, 4})
      for (int m = 0; m <= 6; ++m)
        for (int k = 0; k <= 6; ++k) {
          CAPTURE(r);
          CAPTURE(s);
          CAPTURE(m);
          CAPTURE(k);
          CHECK(intersection_number_11(m, k, r, s) == dense_coefficient_oracle(m, k, r, s));
        }
}

TEST_CASE("intersection numbers for n = 4, r = s = 2") {
  CHECK(intersection_number_11(1, 3, 2, 2) == 4);  // a line with itself through P
  CHECK(intersection_number_11(1, 2, 2, 2) == -2);
  CHECK(intersection_number_11(1, 1, 2, 2) == 1);
  CHECK(intersection_number_11(3, 1, 2, 2) == 4);
  CHECK(intersection_number_11(0, 3, 2, 2) == 0);
  for (int n = 3; n <= 7; ++n)
    for (long s : {2, 3, 4}) CHECK(intersection_number_lc(1, 1, n - 1, 2, s) == int_pow(-s, n - 2));
}

TEST_CASE("general l = c formula reduces to the l = 1 coefficient") {
  for (int m = 0; m <= 5; ++m)
    for (int k = 0; k <= 5; ++k) CHECK(intersection_number_lc(1, m, k, 2, 2) == intersection_number_11(m, k, 2, 2));
}

TEST_CASE("l = c = 2 against the Grassmannian integral") {
  // Lambda = Lambda' of dimension 3 in F^6.
  const Int v = intersection_number_lc(2, 3, 3, 2, 2);
  CHECK(v == grassmannian_integral_oracle(3, 3, 2, 2));
  CHECK(v == 21);
  for (int m = 2; m <= 4; ++m)
    for (int k = 2; k <= 4; ++k)
      for (auto [r, s] : {std::pair<long, long>{2, 2}, {2, 4}, {3, 1}}) {
        CAPTURE(m);
        CAPTURE(k);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(intersection_number_lc(2, m, k, r, s) == grassmannian_integral_oracle(m, k, r, s));
      }
  CHECK(intersection_number_lc(2, 1, 3, 2, 2) == 0);
}

TEST_CASE("pairing with points over F_4 in dimension 4") {
  const auto geo = make_geometry(4, 2, 2);
  const auto pts = geo.points();
  REQUIRE(pts.size() == 85);
  REQUIRE(geo.cycles.size() == 85 + 357 + 85);
  for (const auto& lambda : geo.cycles) {
    for (const auto& p : pts) {
      const auto pair = cycle_pair(lambda, p, 2, 2);
      const bool on = lambda.contains(p);
      const Int expected = on ? int_pow(Int(-2), static_cast<unsigned long>(4 - lambda.dim() - 1)) : Int(0);
      REQUIRE(intersection_number_11(pair) == expected);
      REQUIRE(sigma_point_pairing(4, 2, lambda.dim(), on) == expected);
    }
  }
}

TEST_CASE("cycle pairs read off subspaces") {
  const auto f = gfq::Field::get(2, 2);
  const gfq::Elem a[] = {1, 0, 0, 0, 0, 1, 0, 0};
  const gfq::Elem b[] = {0, 1, 0, 0, 0, 0, 1, 0};
  const auto la = gfq::Subspace::span(f, 4, a);
  const auto lb = gfq::Subspace::span(f, 4, b);
  const auto p = cycle_pair(la, lb, 2, 2);
  CHECK(p.n == 4);
  CHECK(p.m == 1);
  CHECK(p.k == 1);
}

TEST_CASE("hyperplane pairings") {
  CHECK(h_h_pairing(4, 1, 3, 2, 2) == 5);
  CHECK(h_h_pairing(4, 1, 1, 2, 2) == 0);
  CHECK(h_h_pairing(4, 1, 2, 2, 2) == 2);
  CHECK(h_h_pairing(4, 2, 3, 2, 2) == 2);
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i < n; ++i)
      for (int k = 1; k < n; ++k) CHECK(h_sigma_pairing(n, i, k) == (i + k == n ? 1 : 0));
  CHECK(h_gram(4, 2, 2).is_symmetric());
}

TEST_CASE("lemma determinant closed form") {
  for (int m = 3; m <= 6; ++m) {
    const int side = m + 2;
    int checked = 0;
    for (int u = -side / 2; u < side - side / 2; ++u)
      for (int v = -side / 2 + 1; v <= side - side / 2; ++v)
        for (int t = -3; t < side - 3; ++t) {
          const Int expected = det_closed_form(m, u, v, t);
          REQUIRE(det_bareiss(lemma_matrix(m, u, v, t)) == expected);
          if (u * v != 1) REQUIRE(lemma_det_closed_form(m, u, v, t) == expected);
          ++checked;
        }
    CHECK(checked >= side * side * side);
  }
}

TEST_CASE("discriminant of the hyperplane and point block") {
  for (int n = 3; n <= 5; ++n) {
    CAPTURE(n);
    const Int d = hm0_disc(n, 2, 2);
    CHECK(d == hm0_disc_closed_form(n, 2, 2));
    if (n <= 4) CHECK(d == det_bareiss(hm0_gram(n, 2, 2)));
  }
  CHECK(hm0_disc(4, 2, 2) == -int_pow(2, 168));
  CHECK(point_count(4, 4) == 85);
}

TEST_CASE("full Gram matrix for n = 4 over F_4") {
  const auto geo = make_geometry(4, 2, 2);
  const IntMatrix g = full_gram(geo, 2);
  REQUIRE(g.rows() == 3 + 527);
  CHECK(g.is_symmetric());
  const auto basis = row_basis_indices(g);
  CHECK(basis.size() == 87);
  CHECK(det_bareiss(g.principal(basis)) != 0);
  // Sigma-point entries follow the point pairing.
  const std::size_t off = 3;
  for (std::size_t i = 0; i < geo.cycles.size(); ++i) {
    for (std::size_t j = 0; j < geo.points().size(); ++j) {
      const auto& p = geo.points()[j];
      const int col = static_cast<int>(off + geo.offset[1] + j);
      REQUIRE(g(static_cast<int>(off + i), col) ==
              sigma_point_pairing(4, 2, geo.cycles[i].dim(), geo.cycles[i].contains(p)));
    }
  }
  CHECK(full_gram(geo, 1) == g);
}
