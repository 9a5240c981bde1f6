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

#include "frobinc/intmat.hpp"

#include <algorithm>
#include <sstream>

#include "frobinc/error.hpp"

namespace frobinc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, int cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void IntMatrix::append_row(std::span<const Int> r) {
  if (static_cast<int>(r.size()) != cols_) throw DimensionError("row length does not match matrix width");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(rows_, o.cols_);
  Int tmp;
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& b = o(k, j);
        if (b == 0) continue;
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::column_block(int c0, int c1) const {
  IntMatrix out(rows_, c1 - c0);
  for (int i = 0; i < rows_; ++i)
    for (int j = c0; j < c1; ++j) out(i, j - c0) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::principal(const std::vector<int>& idx) const {
  const int k = static_cast<int>(idx.size());
  IntMatrix out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out(i, j) = (*this)(idx[i], idx[j]);
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Fraction-free elimination. Returns the rank; `det_sign` tracks row swaps.
// With `pivoting` false it stops at the first zero leading pivot.
int bareiss(IntMatrix& m, bool pivoting, int& det_sign, std::vector<Int>* minors) {
  const int rows = m.rows(), cols = m.cols();
  Int prev = 1;
  int rank = 0;
  det_sign = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    if (m(rank, col) == 0) {
      if (!pivoting) return rank;
      piv = -1;
      for (int r = rank + 1; r < rows; ++r) {
        if (m(r, col) != 0) {
          piv = r;
          break;
        }
      }
      if (piv < 0) continue;
      for (int c = 0; c < cols; ++c) std::swap(m(rank, c), m(piv, c));
      det_sign = -det_sign;
    }
    const Int pivot = m(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      const Int factor = m(r, col);
      for (int c = col + 1; c < cols; ++c) {
        Int v = pivot * m(r, c) - factor * m(rank, c);
        mpz_divexact(m(r, c).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(r, col) = 0;
    }
    prev = pivot;
    if (minors) minors->push_back(pivot);
    ++rank;
  }
  return rank;
}

}  // namespace

Int det_bareiss(IntMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  int sign = 1;
  const int rank = bareiss(m, true, sign, nullptr);
  if (rank < m.rows()) return 0;
  return sign * m(m.rows() - 1, m.cols() - 1);
}

int exact_rank(IntMatrix m) {
  int sign = 1;
  return bareiss(m, true, sign, nullptr);
}

std::vector<Int> leading_minors(IntMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("leading minors of a non-square matrix");
  std::vector<Int> minors;
  int sign = 1;
  bareiss(m, false, sign, &minors);
  return minors;
}

bool is_positive_definite(const IntMatrix& gram) {
  if (!gram.is_symmetric()) return false;
  const auto minors = leading_minors(gram);
  if (static_cast<int>(minors.size()) != gram.rows()) return false;
  return std::all_of(minors.begin(), minors.end(), [](const Int& v) { return v > 0; });
}

namespace {

// Echelon basis under construction: rows kept sorted by pivot column.
class EchelonBuilder {
 public:
  EchelonBuilder(int cols, std::optional<Int> modulus) : cols_(cols), modulus_(std::move(modulus)) {}

  void insert(std::vector<Int> v) {
    while (true) {
      int j = 0;
      while (j < cols_ && v[j] == 0) ++j;
      if (j == cols_) return;
      reduce_mod(v, j);
      auto it = std::lower_bound(pivots_.begin(), pivots_.end(), j);
      const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
      if (it == pivots_.end() || *it != j) {
        if (v[j] < 0)
          for (auto& e : v) e = -e;
        reduce_mod(v, j);
        pivots_.insert(it, j);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        return;
      }
      auto& b = rows_[pos];
      if (mpz_divisible_p(v[j].get_mpz_t(), b[j].get_mpz_t())) {
        const Int f = v[j] / b[j];
        for (int c = j; c < cols_; ++c) mpz_submul(v[c].get_mpz_t(), f.get_mpz_t(), b[c].get_mpz_t());
      } else {
        Int g, a, cc;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), cc.get_mpz_t(), b[j].get_mpz_t(), v[j].get_mpz_t());
        const Int bj = b[j] / g, vj = v[j] / g;
        for (int c = j; c < cols_; ++c) {
          Int nb = a * b[c] + cc * v[c];
          Int nv = vj * b[c] - bj * v[c];
          b[c] = std::move(nb);
          v[c] = std::move(nv);
        }
        if (b[j] < 0)
          for (auto& e : b) e = -e;
        reduce_mod(b, j);
      }
    }
  }

  // Final pass: reduce entries above each pivot into [0, pivot).
  IntMatrix finish() {
    const int r = static_cast<int>(rows_.size());
    // Row i only touches columns >= its pivot, so ascending order never
    // disturbs an entry that was already reduced.
    for (int i = 0; i < r; ++i) {
      const int p = pivots_[i];
      for (int k = 0; k < i; ++k) {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), rows_[k][p].get_mpz_t(), rows_[i][p].get_mpz_t());
        if (f == 0) continue;
        for (int c = p; c < cols_; ++c) mpz_submul(rows_[k][c].get_mpz_t(), f.get_mpz_t(), rows_[i][c].get_mpz_t());
      }
    }
    IntMatrix out(0, cols_);
    for (const auto& row : rows_) out.append_row(row);
    return out;
  }

 private:
  // Reduces entries other than the leading one at `pivot_col` modulo D when
  // a modulus is set. D * Z^cols lies in the final lattice and the D * e_c
  // rows are inserted last, so the reductions do not change the result.
  void reduce_mod(std::vector<Int>& v, int pivot_col) {
    if (!modulus_) return;
    for (int c = 0; c < cols_; ++c) {
      if (c == pivot_col) continue;
      mpz_fdiv_r(v[c].get_mpz_t(), v[c].get_mpz_t(), modulus_->get_mpz_t());
    }
  }

  int cols_;
  std::optional<Int> modulus_;
  std::vector<int> pivots_;
  std::vector<std::vector<Int>> rows_;
};

}  // namespace

IntMatrix hnf(const IntMatrix& gens) {
  const int m = gens.cols();
  const std::vector<int> rows = row_basis_indices(gens);
  const int r = static_cast<int>(rows.size());
  if (r == 0) return IntMatrix(0, m);
  // Pivot columns of the echelon form are the first independent columns.
  const std::vector<int> piv = row_basis_indices(gens.transpose());
  if (static_cast<int>(piv.size()) != r) throw ConsistencyError("row and column ranks disagree");
  std::vector<bool> is_piv(m, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> rest;
  for (int c = 0; c < m; ++c)
    if (!is_piv[c]) rest.push_back(c);

  auto columns = [](const IntMatrix& a, const std::vector<int>& cols) {
    IntMatrix out(a.rows(), static_cast<int>(cols.size()));
    for (int i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = a(i, cols[j]);
    return out;
  };
  IntMatrix basis_rows(0, m);
  for (int i : rows) basis_rows.append_row(gens.row(i));
  const IntMatrix a_piv = columns(basis_rows, piv);
  const Int d = abs(det_bareiss(a_piv));
  if (d == 0) throw ConsistencyError("selected pivot block is singular");

  // The projection to the pivot columns is injective on the span and its
  // image contains d * Z^r.
  const IntMatrix h_piv = hnf_mod(columns(gens, piv), d);
  IntMatrix out(r, m);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out(i, piv[j]) = h_piv(i, j);
  if (!rest.empty()) {
    const auto t = solve_rational(a_piv, columns(basis_rows, rest));
    for (int i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < rest.size(); ++j) {
        Rat acc = 0;
        for (int k = 0; k < r; ++k) {
          if (h_piv(i, k) != 0) acc += h_piv(i, k) * t[k][j];
        }
        acc.canonicalize();
        if (acc.get_den() != 1) throw ConsistencyError("lifted Hermite row is not integral");
        out(i, rest[j]) = acc.get_num();
      }
    }
  }
  for (int i = 0; i < gens.rows(); ++i) {
    if (!in_lattice(out, gens.row(i))) throw ConsistencyError("generator outside the computed Hermite basis");
  }
  return out;
}

IntMatrix hnf_mod(const IntMatrix& gens, const Int& D) {
  if (D <= 0) throw DomainError("hnf_mod needs a positive modulus");
  const int m = gens.cols();
  EchelonBuilder builder(m, D);
  for (int i = 0; i < gens.rows(); ++i) builder.insert({gens.row(i).begin(), gens.row(i).end()});
  for (int i = 0; i < m; ++i) {
    std::vector<Int> e(m, 0);
    e[i] = D;
    builder.insert(std::move(e));
  }
  return builder.finish();
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const int r = A.rows(), c = A.cols();
  IntMatrix aug(r, c + r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) aug(i, j) = A(i, j);
    aug(i, c + i) = 1;
  }
  const IntMatrix h = hnf(aug);
  IntMatrix kernel(0, r);
  for (int i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < c && zero; ++j) zero = h(i, j) == 0;
    if (!zero) continue;
    std::vector<Int> k(h.row(i).begin() + c, h.row(i).end());
    kernel.append_row(k);
  }
  return hnf(kernel);
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& H, std::span<const Int> v) {
  if (static_cast<int>(v.size()) != H.cols()) throw DimensionError("vector length does not match the lattice");
  std::vector<Int> w(v.begin(), v.end());
  std::vector<Int> coeffs(H.rows(), 0);
  for (int i = 0; i < H.rows(); ++i) {
    int p = 0;
    while (p < H.cols() && H(i, p) == 0) ++p;
    if (p == H.cols()) continue;
    if (!mpz_divisible_p(w[p].get_mpz_t(), H(i, p).get_mpz_t())) return std::nullopt;
    coeffs[i] = w[p] / H(i, p);
    if (coeffs[i] == 0) continue;
    for (int c = p; c < H.cols(); ++c) mpz_submul(w[c].get_mpz_t(), coeffs[i].get_mpz_t(), H(i, c).get_mpz_t());
  }
  for (const auto& e : w) {
    if (e != 0) return std::nullopt;
  }
  return coeffs;
}

bool in_lattice(const IntMatrix& H, std::span<const Int> v) { return solve_in_lattice(H, v).has_value(); }

IntMatrix random_unimodular(int n, std::mt19937_64& rng, int steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<int> pick(0, n - 1), mult(-2, 2), kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) j = (i + 1) % n;
    switch (kind(rng)) {
      case 0:  // swap rows
        for (int c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        break;
      case 1:  // negate a row
        for (int c = 0; c < n; ++c) u(i, c) = -u(i, c);
        break;
      default: {  // row_i += k row_j
        const int k = mult(rng);
        for (int c = 0; c < n; ++c) u(i, c) += k * u(j, c);
      }
    }
  }
  return u;
}

std::vector<int> row_basis_indices(const IntMatrix& m) {
  constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % P);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
    }
    return r;
  };
  const int cols = m.cols();
  const Int modulus = Int(static_cast<unsigned long>(P));
  std::vector<std::vector<std::uint64_t>> basis;  // reduced rows, pivot first nonzero
  std::vector<int> pivots, chosen;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::uint64_t> v(cols);
    for (int j = 0; j < cols; ++j) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), modulus.get_mpz_t());
      v[j] = r.get_ui();
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int p = pivots[b];
      if (v[p] == 0) continue;
      const std::uint64_t f = v[p];
      for (int c = 0; c < cols; ++c) v[c] = (v[c] + P - mulmod(f, basis[b][c])) % P;
    }
    int p = 0;
    while (p < cols && v[p] == 0) ++p;
    if (p == cols) continue;
    const std::uint64_t inv = powmod(v[p], P - 2);
    for (auto& e : v) e = mulmod(e, inv);
    basis.push_back(std::move(v));
    pivots.push_back(p);
    chosen.push_back(i);
  }
  return chosen;
}

std::vector<std::vector<Rat>> solve_rational(const IntMatrix& A, const IntMatrix& B) {
  const int n = A.rows();
  if (A.cols() != n || B.rows() != n) throw DimensionError("solve_rational shape mismatch");
  const int k = B.cols();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + k));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = A(i, j);
    for (int j = 0; j < k; ++j) a[i][n + j] = B(i, j);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DegenerateError("singular matrix in rational solve", n - col);
    std::swap(a[piv], a[col]);
    const Rat inv = 1 / a[col][col];
    for (auto& e : a[col]) e *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int c = col; c < n + k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rat>> x(n, std::vector<Rat>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) x[i][j] = a[i][n + j];
  return x;
}

std::string to_text(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

}  // namespace frobinc
