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

#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobinc/bigint.hpp"

namespace frobinc::poly {

/// Dense univariate polynomial over Z, index = degree, never with a
/// trailing zero coefficient.
class IntPoly1 {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  IntPoly1() = default;
  explicit IntPoly1(std::vector<Int> coeffs);
  static IntPoly1 constant(const Int& c);
  static IntPoly1 monomial(const Int& c, int degree);

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Int coeff(int i) const;
  const Int& leading() const { return coeffs_.back(); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  IntPoly1 operator+(const IntPoly1& o) const;
  IntPoly1 operator-(const IntPoly1& o) const;
  IntPoly1 operator*(const IntPoly1& o) const;
  IntPoly1 operator-() const;
  IntPoly1& operator+=(const IntPoly1& o) { return *this = *this + o; }
  IntPoly1& operator-=(const IntPoly1& o) { return *this = *this - o; }
  bool operator==(const IntPoly1&) const = default;

  /// Quotient by a monic divisor; throws ConsistencyError when the remainder
  /// is nonzero.
  IntPoly1 exact_div(const IntPoly1& divisor) const;

  /// "c q^a + ..." from the top degree down, in variable `var`.
  std::string to_string(const std::string& var = "q") const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

/// Sparse polynomial in Z[x, y].
class IntPoly2 {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_y)

  IntPoly2() = default;
  static IntPoly2 in_x(const IntPoly1& p);
  static IntPoly2 in_y(const IntPoly1& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Int>& terms() const { return terms_; }
  Int coeff(int a, int b) const;
  int degree_y() const;

  /// Coefficient of y^i as a polynomial in x.
  IntPoly1 coeff_y(int i) const;
  /// Substitutes x := value, giving a polynomial in y.
  IntPoly1 eval_x(const Int& value) const;
  Int eval(const Int& x, const Int& y) const;
  bool is_monic_in_y() const;

  IntPoly2 operator+(const IntPoly2& o) const;
  IntPoly2 operator-(const IntPoly2& o) const;
  IntPoly2 operator*(const IntPoly2& o) const;
  IntPoly2& operator+=(const IntPoly2& o);
  IntPoly2& operator-=(const IntPoly2& o);
  bool operator==(const IntPoly2&) const = default;

  /// Terms in deg-lex order on (a, b): lower total degree first, then by a.
  std::vector<std::pair<Key, Int>> sorted_terms() const;
  /// One "coeff x^a y^b" line per term in sorted_terms() order.
  std::string to_term_list() const;

 private:
  void add_term(Key k, const Int& c);
  std::map<Key, Int> terms_;
};

/// Gaussian binomial g_{n,l}(x): its value at q counts l-dimensional
/// subspaces of F_q^n. Zero for l < 0 or l > n.
IntPoly1 gaussian(int n, int l);
/// g_n^c := g_{n, n-c}.
inline IntPoly1 gaussian_codim(int n, int c) { return gaussian(n, n - c); }

/// max(0, 2l - n) <= d <= l <= n.
bool stratum_nonempty(int n, int l, int d);
/// (l - d)(n - l + d), the y-degree of tau when nonzero.
int stratum_degree(int n, int l, int d);

/// tau_{l,d}(x, y) for ambient dimension n: its value at (q, q^nu) counts
/// l-dimensional L over F_{q^nu} with dim(L cap L^q) = d. Memoized.
const IntPoly2& tau(int n, int l, int d);

/// Point-count polynomial N_l^c(x, y); requires l, c >= 1 and l + c < n.
IntPoly2 count_poly(int n, int l, int c);

struct BettiTable {
  int n = 0, l = 0, c = 0;
  std::uint64_t r = 0, s = 0;
  int dim = 0;  // (l + c)(n - l - c)
  /// b_{2i} as polynomials in q = rs, i = 0..dim.
  std::vector<IntPoly1> symbolic;
  /// b_{2i} evaluated at q = rs.
  std::vector<Int> values;
};

BettiTable betti(int n, int l, int c, std::uint64_t r, std::uint64_t s);

/// Validates r, s as powers (exponent >= 0) of one prime, not both 1;
/// returns that prime. Throws DomainError otherwise.
std::uint64_t common_characteristic(std::uint64_t r, std::uint64_t s);

}  // namespace frobinc::poly
