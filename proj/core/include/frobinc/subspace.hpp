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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frobinc/gfq.hpp"

namespace frobinc::gfq {

/// Linear subspace of F^n stored as its reduced row-echelon basis. Two
/// subspaces are equal exactly when their stored matrices are equal.
class Subspace {
 public:
  /// Row space of `vectors` (row-major, rows of length n; any count).
  static Subspace span(FieldPtr field, int n, std::span<const Elem> vectors);
  static Subspace zero(FieldPtr field, int n);
  static Subspace whole(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int ambient_dim() const { return n_; }
  int dim() const { return dim_; }

  Elem at(int row, int col) const { return rows_[static_cast<std::size_t>(row) * n_ + col]; }
  std::span<const Elem> row(int r) const {
    return {rows_.data() + static_cast<std::size_t>(r) * n_, static_cast<std::size_t>(n_)};
  }
  /// Flattened canonical matrix.
  std::span<const Elem> matrix() const { return rows_; }
  std::vector<int> pivots() const;

  bool contains(const Subspace& other) const;
  bool contains_vector(std::span<const Elem> v) const;

  bool operator==(const Subspace& o) const {
    return n_ == o.n_ && dim_ == o.dim_ && rows_ == o.rows_ && same_field(o);
  }
  /// Dimension first, then lexicographic on the flattened matrix.
  std::strong_ordering operator<=>(const Subspace& o) const;

 private:
  Subspace(FieldPtr field, int n, int dim, std::vector<Elem> rows)
      : field_(std::move(field)), n_(n), dim_(dim), rows_(std::move(rows)) {}
  bool same_field(const Subspace& o) const { return field_->spec() == o.field_->spec(); }

  FieldPtr field_;
  int n_ = 0;
  int dim_ = 0;
  std::vector<Elem> rows_;

  friend Subspace frobenius_image(const Subspace&, std::uint64_t);
  friend std::vector<Subspace> enumerate_subspaces(const FieldPtr&, int, int, std::uint64_t);
};

/// Reduces `rows` (row-major, count x n) to reduced row-echelon form in
/// place and returns the rank; the first `rank` rows hold the result.
int rref(const Field& f, int n, std::vector<Elem>& rows);

/// Entrywise q-th power of the basis, re-canonicalized.
Subspace frobenius_image(const Subspace& s, std::uint64_t q);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// Orthogonal complement for the standard bilinear form sum x_i y_i.
Subspace annihilator(const Subspace& s);

/// True when s^q == s, i.e. s is defined over F_q.
bool is_rational_over(const Subspace& s, std::uint64_t q);

/// Number of k-dimensional subspaces of F_q^n, saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint64_t q, int n, int k);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// All k-dimensional subspaces of F^n, each once, sorted by operator<.
std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int k,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

// Text format: "p k n d" on the first line, then d rows of n element indices.
std::string to_text(const Subspace& s);
Subspace parse_subspace(std::istream& in);
Subspace parse_subspace(const std::string& text);

}  // namespace frobinc::gfq
