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

#include "frobinc/gfq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "frobinc/bigint.hpp"
#include "frobinc/error.hpp"

namespace frobinc::gfq {

namespace {

using Poly = std::vector<std::uint32_t>;  // low-to-high over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b (b nonzero).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint64_t index, std::uint32_t p, std::uint32_t k) {
  Poly out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint64_t encode(const Poly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = decode(idx, p, static_cast<std::uint32_t>(d));
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("extension degree must be at least 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxFieldSize) {
      throw CapacityError("field of order " + std::to_string(p) + "^" + std::to_string(k) +
                          " exceeds the enumeration bound 2^20");
    }
  }
  // Lexicographic order comparing c_0 first: enumerate with c_0 as the most
  // significant digit.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f(k + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  size_ = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) size_ *= spec_.p;

  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(order);
  auto is_generator = [&](Elem g) {
    if (g == 0) return false;
    for (auto f : factors) {
      if (pow(g, order / f) == 1) return false;
    }
    return true;
  };
  if (size_ == 2) {
    primitive_ = 1;
  } else {
    for (Elem g = 1; g < size_; ++g) {
      if (is_generator(g)) {
        primitive_ = g;
        break;
      }
    }
  }

  if (size_ <= kTableFieldSize) {
    exp_.assign(2 * order + 1, 0);
    log_.assign(size_, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = poly_mul(x, primitive_);
    }
    for (std::uint64_t i = order; i < exp_.size(); ++i) exp_[i] = exp_[i - order];
  }
}

std::shared_ptr<const Field> Field::from_spec(const FieldSpec& spec) {
  if (!is_prime(spec.p)) throw DomainError("field characteristic is not prime");
  if (spec.modulus.size() != spec.k + 1 || spec.modulus.back() != 1) {
    throw DomainError("modulus must be monic of degree k");
  }
  for (auto c : spec.modulus) {
    if (c >= spec.p) throw DomainError("modulus coefficient out of range");
  }
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    size *= spec.p;
    if (size > kMaxFieldSize) throw CapacityError("field order exceeds the enumeration bound 2^20");
  }
  if (!is_irreducible(spec.modulus, spec.p)) throw DomainError("modulus is not irreducible");
  return std::shared_ptr<const Field>(new Field(spec));
}

std::shared_ptr<const Field> Field::get(std::uint32_t p, std::uint32_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Field>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
  }
  FieldSpec spec{p, k, canonical_modulus(p, k)};
  auto field = from_spec(spec);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, k), std::move(field)).first->second;
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be at least 2");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  const int k = exact_log(q, factors[0]);
  return get(static_cast<std::uint32_t>(factors[0]), static_cast<std::uint32_t>(k));
}

Elem Field::add(Elem a, Elem b) const {
  if (spec_.p == 2) return a ^ b;
  if (spec_.k == 1) return (a + b) % spec_.p;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    out += ((a % spec_.p + b % spec_.p) % spec_.p) * scale;
    a /= spec_.p;
    b /= spec_.p;
    scale *= spec_.p;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (spec_.p == 2) return a;
  if (spec_.k == 1) return (spec_.p - a) % spec_.p;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    out += ((spec_.p - a % spec_.p) % spec_.p) * scale;
    a /= spec_.p;
    scale *= spec_.p;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::poly_mul(Elem a, Elem b) const {
  const auto p = spec_.p;
  Poly pa = decode(a, p, spec_.k), pb = decode(b, p, spec_.k);
  Poly prod(2 * spec_.k, 0);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    if (pa[i] == 0) continue;
    for (std::uint32_t j = 0; j < spec_.k; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    }
  }
  return static_cast<Elem>(encode(poly_rem(std::move(prod), spec_.modulus, p), p));
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return poly_mul(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[(log_[a] * (e % (size_ - 1))) % (size_ - 1)];
  Elem result = 1, base = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero");
  if (!exp_.empty()) return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
  return pow(a, size_ - 2);
}

bool Field::is_power_of_characteristic(std::uint64_t q) const {
  return q == 1 || exact_log(q, spec_.p) >= 0;
}

Elem Field::frobenius(Elem a, std::uint64_t q) const {
  if (!is_power_of_characteristic(q)) {
    throw InvalidFrobenius("Frobenius power " + std::to_string(q) + " is not a power of the characteristic " +
                           std::to_string(spec_.p));
  }
  return pow(a, q);
}

std::string Field::element_name(Elem a) const {
  if (spec_.k == 1) return std::to_string(a);
  std::ostringstream os;
  const Poly c = decode(a, spec_.p, spec_.k);
  bool first = true;
  for (std::uint32_t i = spec_.k; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c[i] != 1 || i == 0) os << c[i];
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace frobinc::gfq
