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

#include "frobinc/series.hpp"

#include <algorithm>
#include <numeric>

#include "frobinc/error.hpp"

namespace frobinc::chow {

namespace {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

TruncSeries::TruncSeries(int num_vars, int bound) : num_vars_(num_vars), bound_(bound) {
  if (num_vars < 0) throw DomainError("negative variable count");
}

TruncSeries TruncSeries::constant(int num_vars, int bound, const Int& c) {
  TruncSeries out(num_vars, bound);
  out.add_term(Exponents(num_vars, 0), c);
  return out;
}

TruncSeries TruncSeries::linear(int num_vars, int bound, const std::vector<Int>& coeffs) {
  if (static_cast<int>(coeffs.size()) != num_vars) throw DimensionError("linear form has the wrong arity");
  TruncSeries out = constant(num_vars, bound, 1);
  for (int i = 0; i < num_vars; ++i) {
    Exponents e(num_vars, 0);
    e[i] = 1;
    out.add_term(e, coeffs[i]);
  }
  return out;
}

Int TruncSeries::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void TruncSeries::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != num_vars_) throw DimensionError("exponent vector has the wrong arity");
  if (c == 0 || total_degree(e) > bound_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  if (o.num_vars_ != num_vars_) throw DimensionError("series have different variable counts");
  TruncSeries out(num_vars_, std::min(bound_, o.bound_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  if (o.num_vars_ != num_vars_) throw DimensionError("series have different variable counts");
  TruncSeries out(num_vars_, std::min(bound_, o.bound_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  if (o.num_vars_ != num_vars_) throw DimensionError("series have different variable counts");
  TruncSeries out(num_vars_, std::min(bound_, o.bound_));
  Exponents e(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : o.terms_) {
      if (da + total_degree(eb) > out.bound_) continue;
      for (int i = 0; i < num_vars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return num_vars_ == o.num_vars_ && bound_ == o.bound_ && terms_ == o.terms_;
}

TruncSeries TruncSeries::inverse() const {
  const Int c0 = coeff(Exponents(num_vars_, 0));
  if (c0 != 1 && c0 != -1) throw DomainError("series inverse needs a unit constant term");
  // f = c0 (1 - g)  =>  f^{-1} = c0 (1 + g + g^2 + ...), g has no constant term.
  TruncSeries one = constant(num_vars_, bound_, 1);
  TruncSeries g = one - (*this * constant(num_vars_, bound_, c0));
  TruncSeries acc = one, power = one;
  for (int k = 1; k <= bound_; ++k) {
    power = power * g;
    if (power.terms_.empty()) break;
    acc = acc + power;
  }
  return acc * constant(num_vars_, bound_, c0);
}

TruncSeries TruncSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncSeries result = constant(num_vars_, bound_, 1), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

TruncSeries TruncSeries::homogeneous_part(int d) const {
  TruncSeries out(num_vars_, bound_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == d) out.add_term(e, c);
  }
  return out;
}

TruncSeries TruncSeries::with_bound(int bound) const {
  TruncSeries out(num_vars_, bound);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

}  // namespace frobinc::chow
