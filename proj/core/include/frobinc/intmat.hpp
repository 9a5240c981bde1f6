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

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "frobinc/bigint.hpp"

namespace frobinc {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::span<Int> row(int i) { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }
  std::span<const Int> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }

  void append_row(std::span<const Int> r);
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  /// Columns [c0, c1).
  IntMatrix column_block(int c0, int c1) const;
  /// Principal submatrix on the given indices.
  IntMatrix principal(const std::vector<int>& idx) const;
  bool is_symmetric() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Int det_bareiss(IntMatrix m);

/// Exact rank via fraction-free elimination.
int exact_rank(IntMatrix m);

/// Leading principal minors d_1..d_n of a square matrix, computed by
/// fraction-free elimination without pivoting; stops early at a zero minor.
std::vector<Int> leading_minors(IntMatrix m);

/// All leading principal minors positive (Sylvester's criterion).
bool is_positive_definite(const IntMatrix& gram);

/// Row-style Hermite normal form of the lattice spanned by the rows of
/// `gens`: echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so rows() is the rank.
IntMatrix hnf(const IntMatrix& gens);

/// Hermite normal form when D * Z^cols is known to lie in the lattice; all
/// intermediate entries stay below D. The result is square.
IntMatrix hnf_mod(const IntMatrix& gens, const Int& D);

/// Basis (in Hermite normal form) of {x in Z^rows : x^T A = 0}.
IntMatrix integer_kernel(const IntMatrix& A);

/// Coefficients c with c^T H = v for an echelon basis H, if v lies in the
/// lattice.
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& H, std::span<const Int> v);
bool in_lattice(const IntMatrix& H, std::span<const Int> v);

/// Product of `steps` random elementary operations with multipliers in
/// [-2, 2]; determinant +-1.
IntMatrix random_unimodular(int n, std::mt19937_64& rng, int steps);

/// Rows indices forming a basis of the row space of a symmetric matrix,
/// chosen greedily in order; the principal submatrix on them is then
/// nonsingular.
std::vector<int> row_basis_indices(const IntMatrix& m);

/// Rational solve: returns A^{-1} B for square nonsingular A.
std::vector<std::vector<Rat>> solve_rational(const IntMatrix& A, const IntMatrix& B);

std::string to_text(const IntMatrix& m);

}  // namespace frobinc
