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

#include "frobinc/polycount.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "frobinc/error.hpp"

namespace frobinc::poly {

IntPoly1::IntPoly1(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly1 IntPoly1::constant(const Int& c) { return IntPoly1(std::vector<Int>{c}); }

IntPoly1 IntPoly1::monomial(const Int& c, int degree) {
  std::vector<Int> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly1(std::move(v));
}

void IntPoly1::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly1::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Int IntPoly1::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPoly1 IntPoly1::operator+(const IntPoly1& o) const {
  std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return IntPoly1(std::move(v));
}

IntPoly1 IntPoly1::operator-() const {
  std::vector<Int> v(coeffs_);
  for (auto& c : v) c = -c;
  return IntPoly1(std::move(v));
}

IntPoly1 IntPoly1::operator-(const IntPoly1& o) const { return *this + (-o); }

IntPoly1 IntPoly1::operator*(const IntPoly1& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPoly1(std::move(v));
}

IntPoly1 IntPoly1::exact_div(const IntPoly1& divisor) const {
  if (!divisor.is_monic()) throw DomainError("exact_div expects a monic divisor");
  std::vector<Int> rem(coeffs_);
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) {
    if (!is_zero()) throw ConsistencyError("inexact polynomial division");
    return {};
  }
  std::vector<Int> quot(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Int factor = rem[i];
    if (factor == 0) continue;
    quot[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * divisor.coeffs_[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw ConsistencyError("inexact polynomial division");
  }
  return IntPoly1(std::move(quot));
}

std::string IntPoly1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly2 IntPoly2::in_x(const IntPoly1& p) {
  IntPoly2 out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term({i, 0}, p.coeff(i));
  return out;
}

IntPoly2 IntPoly2::in_y(const IntPoly1& p) {
  IntPoly2 out;
  for (int i = 0; i <= p.degree(); ++i) out.add_term({0, i}, p.coeff(i));
  return out;
}

void IntPoly2::add_term(Key k, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int IntPoly2::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Int(0) : it->second;
}

int IntPoly2::degree_y() const {
  if (terms_.empty()) return IntPoly1::kZeroDegree;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

IntPoly1 IntPoly2::coeff_y(int i) const {
  std::vector<Int> v;
  for (const auto& [k, c] : terms_) {
    if (k.second != i) continue;
    if (static_cast<int>(v.size()) <= k.first) v.resize(k.first + 1, 0);
    v[k.first] += c;
  }
  return IntPoly1(std::move(v));
}

IntPoly1 IntPoly2::eval_x(const Int& value) const {
  const int dy = degree_y();
  if (dy == IntPoly1::kZeroDegree) return {};
  std::vector<Int> v(static_cast<std::size_t>(dy) + 1, 0);
  for (int i = 0; i <= dy; ++i) v[i] = coeff_y(i).eval(value);
  return IntPoly1(std::move(v));
}

Int IntPoly2::eval(const Int& x, const Int& y) const { return eval_x(x).eval(y); }

bool IntPoly2::is_monic_in_y() const {
  const int dy = degree_y();
  if (dy == IntPoly1::kZeroDegree) return false;
  const IntPoly1 lead = coeff_y(dy);
  return lead.degree() == 0 && lead.coeff(0) == 1;
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

IntPoly2& IntPoly2::operator-=(const IntPoly2& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
  IntPoly2 out(*this);
  out += o;
  return out;
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const {
  IntPoly2 out(*this);
  out -= o;
  return out;
}

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
  IntPoly2 out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

std::vector<std::pair<IntPoly2::Key, Int>> IntPoly2::sorted_terms() const {
  std::vector<std::pair<Key, Int>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    return std::tie(ta, a.first.first) < std::tie(tb, b.first.first);
  });
  return out;
}

std::string IntPoly2::to_term_list() const {
  std::ostringstream os;
  for (const auto& [k, c] : sorted_terms()) os << c.get_str() << " x^" << k.first << " y^" << k.second << '\n';
  return os.str();
}

IntPoly1 gaussian(int n, int l) {
  if (l < 0 || l > n) return {};
  IntPoly1 num = IntPoly1::constant(1), den = IntPoly1::constant(1);
  for (int i = 0; i < l; ++i) {
    num = num * (IntPoly1::monomial(1, n) - IntPoly1::monomial(1, i));
    den = den * (IntPoly1::monomial(1, l) - IntPoly1::monomial(1, i));
  }
  // Both products carry the factor x^{0+1+...+(l-1)}; strip it so the
  // divisor is monic with nonzero constant term.
  const int shift = l * (l - 1) / 2;
  auto strip = [shift](const IntPoly1& p) {
    std::vector<Int> v(p.coeffs().begin() + shift, p.coeffs().end());
    return IntPoly1(std::move(v));
  };
  return strip(num).exact_div(strip(den));
}

bool stratum_nonempty(int n, int l, int d) { return std::max(0, 2 * l - n) <= d && d <= l && l <= n; }

int stratum_degree(int n, int l, int d) { return (l - d) * (n - l + d); }

namespace {

std::mutex tau_mutex;
std::map<std::tuple<int, int, int>, IntPoly2> tau_memo;

IntPoly2 compute_tau(int n, int l, int d) {
  if (l > n || d > l || l < 0 || d < 0) return {};
  if (d == l) return IntPoly2::in_x(gaussian(n, l));
  IntPoly2 out;
  for (int u = l; u <= 2 * l - d; ++u) {
    const IntPoly2& t = tau(n, 2 * l - d, u);
    if (t.is_zero()) continue;
    out += t * IntPoly2::in_y(gaussian(u, l));
  }
  for (int t = d + 1; t <= l; ++t) {
    const IntPoly2& tt = tau(n, l, t);
    if (tt.is_zero()) continue;
    out -= tt * IntPoly2::in_y(gaussian(n - 2 * l + t, t - d));
  }
  return out;
}

}  // namespace

const IntPoly2& tau(int n, int l, int d) {
  const auto key = std::make_tuple(n, l, d);
  {
    std::lock_guard lock(tau_mutex);
    if (auto it = tau_memo.find(key); it != tau_memo.end()) return it->second;
  }
  IntPoly2 value = compute_tau(n, l, d);
  std::lock_guard lock(tau_mutex);
  // std::map never invalidates references, and the first fill wins.
  return tau_memo.try_emplace(key, std::move(value)).first->second;
}

IntPoly2 count_poly(int n, int l, int c) {
  if (l < 1 || c < 1 || l + c >= n) {
    throw DomainError("count polynomial needs l >= 1, c >= 1 and l + c < n (got n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ", c=" + std::to_string(c) + ")");
  }
  IntPoly2 out;
  for (int d = 0; d <= l; ++d) {
    const IntPoly2& t = tau(n, l, d);
    if (t.is_zero()) continue;
    out += t * IntPoly2::in_y(gaussian_codim(n - 2 * l + d, c));
  }
  return out;
}

std::uint64_t common_characteristic(std::uint64_t r, std::uint64_t s) {
  if (r == 0 || s == 0) throw DomainError("Frobenius powers must be positive");
  if (r == 1 && s == 1) throw DomainError("at least one of r, s must exceed 1");
  const std::uint64_t base = r > 1 ? r : s;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= base; ++d) {
    if (base % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = base;
  if (exact_log(r, p) < 0 || exact_log(s, p) < 0) {
    throw DomainError("r=" + std::to_string(r) + " and s=" + std::to_string(s) +
                      " are not powers of one prime");
  }
  return p;
}

BettiTable betti(int n, int l, int c, std::uint64_t r, std::uint64_t s) {
  common_characteristic(r, s);
  const IntPoly2 N = count_poly(n, l, c);
  BettiTable out;
  out.n = n;
  out.l = l;
  out.c = c;
  out.r = r;
  out.s = s;
  out.dim = (l + c) * (n - l - c);
  const Int q = Int(static_cast<unsigned long>(r)) * Int(static_cast<unsigned long>(s));
  for (int i = 0; i <= out.dim; ++i) {
    out.symbolic.push_back(N.coeff_y(i));
    out.values.push_back(out.symbolic.back().eval(q));
  }
  return out;
}

}  // namespace frobinc::poly
