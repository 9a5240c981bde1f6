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

// Small finite fields F_{p^k}.
//
// An element is addressed by its index: the residue polynomial
// c_0 + c_1 t + ... + c_{k-1} t^{k-1} modulo the field's modulus, encoded
// as the integer sum c_i p^i. Index 0 is zero, 1 is one, and indices below
// p are exactly the prime-field elements. Fields with at most 2^16
// elements carry exponent/logarithm tables; larger ones reduce polynomials
// on the fly.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frobinc::gfq {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kTableFieldSize = std::uint64_t{1} << 16;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  /// Monic irreducible modulus, coefficients low-to-high, size k+1.
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t v);

/// True when `poly` (low-to-high, monic) has no monic factor of degree
/// 1..deg/2 over F_p.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Lexicographically smallest (comparing c_0, c_1, ... in order) monic
/// irreducible polynomial of degree k over F_p.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k);

class Field {
 public:
  /// Canonical field of order p^k; instances are cached and shared.
  static std::shared_ptr<const Field> get(std::uint32_t p, std::uint32_t k);
  /// Field of order q (a prime power).
  static std::shared_ptr<const Field> of_order(std::uint64_t q);
  static std::shared_ptr<const Field> from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.k; }
  std::uint64_t size() const { return size_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// a^q; throws InvalidFrobenius unless q is a power of the characteristic.
  Elem frobenius(Elem a, std::uint64_t q) const;
  bool is_power_of_characteristic(std::uint64_t q) const;

  /// A fixed generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

  std::string element_name(Elem a) const;

 private:
  explicit Field(FieldSpec spec);

  Elem poly_mul(Elem a, Elem b) const;

  FieldSpec spec_;
  std::uint64_t size_;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;          // exp_[i] = g^i, doubled length
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

using FieldPtr = std::shared_ptr<const Field>;

/// Field element bound to its field, for code that prefers value semantics
/// over passing the field around.
class FqElem {
 public:
  FqElem(FieldPtr field, Elem rep) : field_(std::move(field)), rep_(rep) {}

  const FieldPtr& field() const { return field_; }
  Elem rep() const { return rep_; }

  FqElem operator+(const FqElem& o) const { return {field_, field_->add(rep_, o.rep_)}; }
  FqElem operator-(const FqElem& o) const { return {field_, field_->sub(rep_, o.rep_)}; }
  FqElem operator*(const FqElem& o) const { return {field_, field_->mul(rep_, o.rep_)}; }
  FqElem operator/(const FqElem& o) const { return {field_, field_->div(rep_, o.rep_)}; }
  FqElem operator-() const { return {field_, field_->neg(rep_)}; }
  FqElem pow(std::uint64_t e) const { return {field_, field_->pow(rep_, e)}; }
  FqElem frobenius(std::uint64_t q) const { return {field_, field_->frobenius(rep_, q)}; }

  bool operator==(const FqElem& o) const { return rep_ == o.rep_ && field_ == o.field_; }

 private:
  FieldPtr field_;
  Elem rep_;
};

}  // namespace frobinc::gfq
