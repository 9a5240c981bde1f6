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

#include "frobinc/subspace.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>

#include "frobinc/error.hpp"

namespace frobinc::gfq {

int rref(const Field& f, int n, std::vector<Elem>& rows) {
  const int count = n == 0 ? 0 : static_cast<int>(rows.size() / n);
  auto at = [&](int r, int c) -> Elem& { return rows[static_cast<std::size_t>(r) * n + c]; };
  int rank = 0;
  for (int col = 0; col < n && rank < count; ++col) {
    int piv = -1;
    for (int r = rank; r < count; ++r) {
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) {
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(rank, c));
    }
    const Elem scale = f.inv(at(rank, col));
    for (int c = col; c < n; ++c) at(rank, c) = f.mul(at(rank, c), scale);
    for (int r = 0; r < count; ++r) {
      if (r == rank || at(r, col) == 0) continue;
      const Elem factor = at(r, col);
      for (int c = col; c < n; ++c) at(r, c) = f.sub(at(r, c), f.mul(factor, at(rank, c)));
    }
    ++rank;
  }
  rows.resize(static_cast<std::size_t>(rank) * n);
  return rank;
}

Subspace Subspace::span(FieldPtr field, int n, std::span<const Elem> vectors) {
  if (n < 0) throw DomainError("negative ambient dimension");
  if (n > 0 && vectors.size() % n != 0) throw DimensionError("vector data is not a multiple of the ambient dimension");
  for (Elem e : vectors) {
    if (e >= field->size()) throw DomainError("element index out of range for the field");
  }
  std::vector<Elem> rows(vectors.begin(), vectors.end());
  const int d = rref(*field, n, rows);
  return Subspace(std::move(field), n, d, std::move(rows));
}

Subspace Subspace::zero(FieldPtr field, int n) { return Subspace(std::move(field), n, 0, {}); }

Subspace Subspace::whole(FieldPtr field, int n) {
  std::vector<Elem> rows(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i) * n + i] = 1;
  return Subspace(std::move(field), n, n, std::move(rows));
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  out.reserve(dim_);
  for (int r = 0; r < dim_; ++r) {
    int c = 0;
    while (at(r, c) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  if (auto c = dim_ <=> o.dim_; c != 0) return c;
  return std::lexicographical_compare_three_way(rows_.begin(), rows_.end(), o.rows_.begin(), o.rows_.end());
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != n_) throw DimensionError("vector length does not match the ambient dimension");
  const Field& f = *field_;
  std::vector<Elem> w(v.begin(), v.end());
  const auto piv = pivots();
  for (int r = 0; r < dim_; ++r) {
    const Elem factor = w[piv[r]];
    if (factor == 0) continue;
    for (int c = piv[r]; c < n_; ++c) w[c] = f.sub(w[c], f.mul(factor, at(r, c)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_ || !same_field(other)) throw DimensionError("subspaces live in different ambient spaces");
  if (other.dim_ > dim_) return false;
  for (int r = 0; r < other.dim_; ++r) {
    if (!contains_vector(other.row(r))) return false;
  }
  return true;
}

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field()->spec() == b.field()->spec())) {
    throw DimensionError("subspaces live in different ambient spaces");
  }
}

}  // namespace

Subspace frobenius_image(const Subspace& s, std::uint64_t q) {
  const Field& f = *s.field_;
  if (!f.is_power_of_characteristic(q)) {
    throw InvalidFrobenius("Frobenius power " + std::to_string(q) + " is not a power of the characteristic " +
                           std::to_string(f.characteristic()));
  }
  std::vector<Elem> rows(s.rows_);
  for (auto& e : rows) e = f.pow(e, q);
  // A field automorphism maps a reduced echelon matrix to one; rref only
  // normalizes representation.
  const int d = rref(f, s.n_, rows);
  return Subspace(s.field_, s.n_, d, std::move(rows));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  std::vector<Elem> rows(a.matrix().begin(), a.matrix().end());
  rows.insert(rows.end(), b.matrix().begin(), b.matrix().end());
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace annihilator(const Subspace& s) {
  const Field& f = *s.field();
  const int n = s.ambient_dim();
  const auto piv = s.pivots();
  std::vector<bool> is_pivot(n, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Elem> rows;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (int r = 0; r < s.dim(); ++r) v[piv[r]] = f.neg(s.at(r, free));
    rows.insert(rows.end(), v.begin(), v.end());
  }
  return Subspace::span(s.field(), n, rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

bool is_rational_over(const Subspace& s, std::uint64_t q) { return frobenius_image(s, q) == s; }

std::uint64_t subspace_count(std::uint64_t q, int n, int k) {
  if (k < 0 || k > n) return 0;
  // Pascal-type recursion [n,k] = [n-1,k-1] + q^k [n-1,k] with saturation.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(k, m); j >= 1; --j) {
      unsigned __int128 qj = 1;
      for (int t = 0; t < j && qj <= kMax; ++t) qj *= q;
      unsigned __int128 v = qj * row[j] + row[j - 1];
      if (qj > kMax || v > kMax) v = kMax;
      row[j] = static_cast<std::uint64_t>(v);
    }
  }
  return row[k];
}

std::vector<Subspace> enumerate_subspaces(const FieldPtr& field, int n, int k, std::uint64_t budget) {
  if (k < 0 || k > n) throw DomainError("subspace dimension out of range");
  const std::uint64_t total = subspace_count(field->size(), n, k);
  if (total > budget) {
    throw CapacityError("enumerating " + std::to_string(k) + "-dimensional subspaces of F_" +
                        std::to_string(field->size()) + "^" + std::to_string(n) + " needs " +
                        std::to_string(total) + " entries; budget is " + std::to_string(budget));
  }
  std::vector<Subspace> out;
  out.reserve(total);
  const Elem q = static_cast<Elem>(field->size());

  std::vector<int> piv(k);
  for (int i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // Free positions: row i, column c > piv[i] that is not a pivot column.
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::size_t> free_pos;
    for (int i = 0; i < k; ++i) {
      for (int c = piv[i] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_pos.push_back(static_cast<std::size_t>(i) * n + c);
      }
    }
    std::vector<Elem> base(static_cast<std::size_t>(k) * n, 0);
    for (int i = 0; i < k; ++i) base[static_cast<std::size_t>(i) * n + piv[i]] = 1;
    std::vector<Elem> digits(free_pos.size(), 0);
    while (true) {
      std::vector<Elem> rows = base;
      for (std::size_t t = 0; t < free_pos.size(); ++t) rows[free_pos[t]] = digits[t];
      out.push_back(Subspace(field, n, k, std::move(rows)));
      std::size_t t = 0;
      while (t < digits.size() && ++digits[t] == q) digits[t++] = 0;
      if (t == digits.size()) break;
    }
    int i = k - 1;
    while (i >= 0 && piv[i] == n - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_text(const Subspace& s) {
  std::ostringstream os;
  const auto& spec = s.field()->spec();
  os << spec.p << ' ' << spec.k << ' ' << s.ambient_dim() << ' ' << s.dim() << '\n';
  for (int r = 0; r < s.dim(); ++r) {
    for (int c = 0; c < s.ambient_dim(); ++c) os << (c ? " " : "") << s.at(r, c);
    os << '\n';
  }
  return os.str();
}

Subspace parse_subspace(std::istream& in) {
  long long p = 0, k = 0, n = 0, d = 0;
  if (!(in >> p >> k >> n >> d)) throw DomainError("subspace header must be \"p k n d\"");
  if (p < 2 || k < 1 || n < 0 || d < 0 || d > n) throw DomainError("invalid subspace header");
  auto field = Field::get(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  std::vector<Elem> rows;
  rows.reserve(static_cast<std::size_t>(n * d));
  for (long long i = 0; i < n * d; ++i) {
    long long v = 0;
    if (!(in >> v)) throw DomainError("subspace body ended early");
    if (v < 0 || static_cast<std::uint64_t>(v) >= field->size()) throw DomainError("element index out of range");
    rows.push_back(static_cast<Elem>(v));
  }
  auto s = Subspace::span(field, static_cast<int>(n), rows);
  if (s.dim() != d) throw DomainError("subspace rows are linearly dependent");
  return s;
}

Subspace parse_subspace(const std::string& text) {
  std::istringstream in(text);
  return parse_subspace(in);
}

}  // namespace frobinc::gfq
