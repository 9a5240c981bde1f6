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


#include "frobinc/chow.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "frobinc/error.hpp"
#include "frobinc/polycount.hpp"
#include "frobinc/series.hpp"

namespace frobinc::chow {

namespace {

Int neg_pow(const Int& s, long e) { return int_pow(Int(-s), static_cast<unsigned long>(e)); }

// Sign of a permutation given as an index vector.
int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// The Chern series f in l x-variables followed by c y-variables.
TruncSeries chern_series(int l, int c, int m, int k, const Int& r, const Int& s, int bound) {
  const int vars = l + c;
  TruncSeries f = TruncSeries::constant(vars, bound, 1);
  auto unit = [&](int var, const Int& coeff) {
    std::vector<Int> lin(vars, 0);
    lin[var] = coeff;
    return TruncSeries::linear(vars, bound, lin);
  };
  for (int i = 0; i < l; ++i) f = f * unit(i, 1).pow(k);
  for (int j = 0; j < c; ++j) f = f * unit(l + j, 1).pow(m);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < c; ++j) {
      std::vector<Int> a(vars, 0), b(vars, 0);
      a[i] = r;
      a[l + j] = 1;
      b[i] = 1;
      b[l + j] = s;
      f = f * TruncSeries::linear(vars, bound, a).inverse();
      f = f * TruncSeries::linear(vars, bound, b).inverse();
    }
  }
  return f;
}

// Sum over permutations sigma of sign(sigma) x^{rect + delta - delta o sigma},
// delta = (len-1, ..., 0): the exponents picked out by the Vandermonde
// product in a bialternant.
std::vector<std::pair<std::vector<int>, int>> bialternant_terms(int len, int rect) {
  std::vector<std::pair<std::vector<int>, int>> out;
  std::vector<int> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> e(len);
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      e[i] = rect + (len - 1 - i) - (len - 1 - perm[i]);
      ok = ok && e[i] >= 0;
    }
    if (ok) out.emplace_back(std::move(e), permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

CyclePair cycle_pair(const gfq::Subspace& a, const gfq::Subspace& b, const Int& r, const Int& s) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("cycles live in different ambient spaces");
  const int n = a.ambient_dim();
  const int sum_dim = gfq::sum(a, b).dim();
  CyclePair p;
  p.n = n;
  p.r = r;
  p.s = s;
  p.m = a.dim() + b.dim() - sum_dim;
  p.k = n - sum_dim;
  return p;
}

Int intersection_number_11(int m, int k, const Int& r, const Int& s) {
  if (m <= 0 || k <= 0) return 0;
  const TruncSeries f = chern_series(1, 1, m, k, r, s, m + k - 2);
  return f.coeff({m - 1, k - 1});
}

Int intersection_number_11(const CyclePair& pair) { return intersection_number_11(pair.m, pair.k, pair.r, pair.s); }

Int intersection_number_lc(int l, int m, int k, const Int& r, const Int& s) {
  if (l < 1) throw DomainError("cycle type l must be positive");
  if (m < l || k < l) return 0;
  const int d = k * l + m * l - 2 * l * l;
  const TruncSeries f = chern_series(l, l, m, k, r, s, d);
  const auto xs = bialternant_terms(l, m - l);
  const auto ys = bialternant_terms(l, k - l);
  Int total = 0;
  std::vector<int> e(2 * l);
  for (const auto& [ex, sx] : xs) {
    for (const auto& [ey, sy] : ys) {
      std::copy(ex.begin(), ex.end(), e.begin());
      std::copy(ey.begin(), ey.end(), e.begin() + l);
      total += sx * sy * f.coeff(e);
    }
  }
  return total;
}

Int intersection_number_lc(const CyclePair& pair) {
  if (pair.l != pair.c) throw DomainError("intersection numbers are only defined here for l = c");
  return intersection_number_lc(pair.l, pair.m, pair.k, pair.r, pair.s);
}

Int sigma_point_pairing(int n, const Int& s, int dim_lambda, bool point_in_lambda) {
  if (!point_in_lambda) return 0;
  return neg_pow(s, n - dim_lambda - 1);
}

Int h_sigma_pairing(int n, int i, int dim_lambda) { return i + dim_lambda == n ? 1 : 0; }

Int h_h_pairing(int n, int i, int j, const Int& r, const Int& s) {
  if (i + j == n - 1) return s;
  if (i + j == n) return 1 + r * s;
  if (i + j == n + 1) return r;
  return 0;
}

IntMatrix lemma_matrix(int m, const Int& u, const Int& v, const Int& t) {
  IntMatrix a(m, m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      Int& e = a(i - 1, j - 1);
      if (i + j == m) e = u;
      else if (i + j == m + 1) e = 1 + u * v;
      else if (i + j == m + 2) e = v;
    }
  }
  a(m - 1, m - 1) += t;
  return a;
}

Int lemma_det_closed_form(int m, const Int& u, const Int& v, const Int& t) {
  Int geometric = 0, power = 1;
  for (int i = 0; i <= m; ++i) {
    geometric += power;
    power *= u * v;
  }
  const Int value = geometric + neg_pow(u, m - 1) * t;
  return (m / 2) % 2 == 0 ? value : Int(-value);
}

IntMatrix h_gram(int n, const Int& r, const Int& s) {
  IntMatrix g(n - 1, n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) g(i - 1, j - 1) = h_h_pairing(n, i, j, r, s);
  return g;
}

Int point_count(int n, const Int& q) {
  Int total = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

IntMatrix hm0_gram(int n, const Int& r, const Int& s) {
  if (n < 3) throw DomainError("hm0_gram needs n >= 3");
  const Int f = point_count(n, r * s);
  if (f > 4096) throw CapacityError("hm0_gram would have " + f.get_str() + " rows; use hm0_disc");
  const int points = static_cast<int>(f.get_si()) - 1;
  const int size = n - 1 + points;
  IntMatrix g(size, size);
  const IntMatrix h = h_gram(n, r, s);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) g(i, j) = h(i, j);
  const Int diag = neg_pow(s, n - 2);
  for (int p = 0; p < points; ++p) {
    const int idx = n - 1 + p;
    g(idx, idx) = diag;
    for (int i = 1; i < n; ++i) g(i - 1, idx) = g(idx, i - 1) = h_sigma_pairing(n, i, 1);
  }
  return g;
}

Int hm0_disc(int n, const Int& r, const Int& s) {
  if (n < 3) throw DomainError("hm0_disc needs n >= 3");
  const Int f = point_count(n, r * s);
  const Int sigma = neg_pow(s, n - 2);
  // Schur complement of the diagonal block sigma * I: only the (n-1, n-1)
  // entry of A_H changes, by -(f-1)/sigma. Scale that row by sigma.
  IntMatrix inner = h_gram(n, r, s);
  for (int j = 0; j < n - 1; ++j) inner(n - 2, j) *= sigma;
  inner(n - 2, n - 2) -= f - 1;
  Int power;
  mpz_pow_ui(power.get_mpz_t(), sigma.get_mpz_t(), Int(f - 2).get_ui());
  return power * det_bareiss(inner);
}

Int hm0_disc_closed_form(int n, const Int& r, const Int& s) {
  const Int f = point_count(n, r * s);
  Int value;
  const Int base = -s;
  mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - 2) * Int(f - 1).get_ui());
  return ((n - 1) / 2) % 2 == 0 ? value : Int(-value);
}

CycleGeometry make_geometry(int n, std::uint64_t r, std::uint64_t s, std::uint64_t budget) {
  poly::common_characteristic(r, s);
  if (n < 2) throw DomainError("cycle geometry needs n >= 2");
  CycleGeometry geo;
  geo.n = n;
  geo.r = r;
  geo.s = s;
  geo.field = gfq::Field::of_order(r * s);
  geo.offset.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 1; k < n; ++k) {
    geo.offset[k] = geo.cycles.size();
    auto subs = gfq::enumerate_subspaces(geo.field, n, k, budget);
    geo.cycles.insert(geo.cycles.end(), std::make_move_iterator(subs.begin()), std::make_move_iterator(subs.end()));
  }
  geo.offset[n] = geo.cycles.size();
  return geo;
}

IntMatrix full_gram(const CycleGeometry& geo, unsigned threads) {
  const int n = geo.n;
  const Int r(static_cast<unsigned long>(geo.r)), s(static_cast<unsigned long>(geo.s));
  const int hs = n - 1;
  const int size = hs + static_cast<int>(geo.cycles.size());
  IntMatrix g(size, size);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) g(i - 1, j - 1) = h_h_pairing(n, i, j, r, s);
    for (std::size_t c = 0; c < geo.cycles.size(); ++c) {
      const int idx = hs + static_cast<int>(c);
      g(i - 1, idx) = g(idx, i - 1) = h_sigma_pairing(n, i, geo.cycles[c].dim());
    }
  }
  // table[m][k]
  std::vector<std::vector<Int>> table(n + 1, std::vector<Int>(n + 1));
  for (int m = 0; m <= n; ++m)
    for (int k = 0; k <= n; ++k) table[m][k] = intersection_number_11(m, k, r, s);

  const std::size_t count = geo.cycles.size();
  auto fill_row = [&](std::size_t a) {
    const auto& A = geo.cycles[a];
    for (std::size_t b = a; b < count; ++b) {
      const auto& B = geo.cycles[b];
      const int sum_dim = gfq::sum(A, B).dim();
      const int m = A.dim() + B.dim() - sum_dim, k = n - sum_dim;
      g(hs + static_cast<int>(a), hs + static_cast<int>(b)) = table[m][k];
    }
  };
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  if (workers <= 1) {
    for (std::size_t a = 0; a < count; ++a) fill_row(a);
  } else {
    // Rows are interleaved across workers; each entry is written by exactly
    // one worker.
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t a = w; a < count; a += workers) fill_row(a);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < a; ++b) g(hs + static_cast<int>(a), hs + static_cast<int>(b)) = g(hs + static_cast<int>(b), hs + static_cast<int>(a));
  return g;
}

}  // namespace frobinc::chow
