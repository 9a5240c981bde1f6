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

#include <map>
#include <vector>

#include "frobinc/bigint.hpp"

namespace frobinc::chow {

using Exponents = std::vector<int>;

/// Multivariate power series over Z truncated above a fixed total degree.
/// Every product is truncated to the smaller of the operands' bounds.
class TruncSeries {
 public:
  TruncSeries(int num_vars, int bound);

  static TruncSeries constant(int num_vars, int bound, const Int& c);
  /// 1 + sum_i coeffs[i] * var_i.
  static TruncSeries linear(int num_vars, int bound, const std::vector<Int>& coeffs);

  int num_vars() const { return num_vars_; }
  int bound() const { return bound_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  Int coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Int& c);

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  bool operator==(const TruncSeries& o) const;

  /// Multiplicative inverse; the constant term must be +1 or -1.
  TruncSeries inverse() const;
  TruncSeries pow(int e) const;

  /// Terms of total degree exactly d.
  TruncSeries homogeneous_part(int d) const;
  /// Copy with a larger bound (no truncation); used for exact polynomial
  /// products of homogeneous parts.
  TruncSeries with_bound(int bound) const;

 private:
  int num_vars_;
  int bound_;
  std::map<Exponents, Int> terms_;
};

}  // namespace frobinc::chow
