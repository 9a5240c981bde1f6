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

// Linear codes over F_2 and over Z/2^e, weight enumerators, and the
// filtration of a Z/2^e code by 2-adic valuation.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frobinc/bigint.hpp"
#include "frobinc/intmat.hpp"

namespace frobinc::codes {

/// Binary word packed little-endian into 64-bit words.
using Word = std::vector<std::uint64_t>;

Word make_word(int length);
Word word_from_bits(std::span<const int> bits);
bool get_bit(const Word& w, int i);
void set_bit(Word& w, int i, bool v);
int weight(const Word& w);

/// Binary linear code held as a reduced row-echelon generator matrix.
class CodeF2 {
 public:
  explicit CodeF2(int length) : length_(length) {}
  /// Row space of the given words.
  static CodeF2 span(int length, const std::vector<Word>& words);

  int length() const { return length_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Word>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool contains(const Word& w) const;
  bool operator==(const CodeF2& o) const { return length_ == o.length_ && rows_ == o.rows_; }

 private:
  int length_;
  std::vector<Word> rows_;
  std::vector<int> pivots_;
};

/// Orthogonal complement for the standard inner product.
CodeF2 dual(const CodeF2& code);
/// {x : x_0 + ... + x_{n-1} = 0}.
CodeF2 even_weight_code(int length);

/// Hamming weight distribution: coeffs[w] = number of words of weight w.
struct WeightEnum {
  std::vector<Int> coeffs;

  int length() const { return static_cast<int>(coeffs.size()) - 1; }
  Int total() const;
  /// Smallest positive weight with a nonzero count, or -1.
  int min_nonzero_weight() const;
  /// "weight count" lines for nonzero counts, ascending weight.
  std::string to_lines() const;
  bool operator==(const WeightEnum&) const = default;
};

inline constexpr int kDefaultMaxCodeDim = 26;

/// Enumerates all 2^dim codewords in Gray-code order. Work is split over
/// `threads` workers by cosets of the leading generators; the histogram does
/// not depend on the split. Throws CapacityError above `max_dim`.
WeightEnum weight_enumerator_direct(const CodeF2& code, int max_dim = kDefaultMaxCodeDim, unsigned threads = 1);

/// Enumerator of the dual of a code of the given dimension and length:
/// 2^{-dim} sum_w A_w (1-x)^w (1+x)^{length-w}. Throws ConsistencyError if
/// the result is not integral.
WeightEnum macwilliams(const WeightEnum& e, int dim, int length);

/// Standard form of a code over Z/2^e: row i equals 2^{valuation[i]} times
/// a word with a unit at column pivot[i] and zeros at earlier pivots.
struct ChainForm {
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<int> pivots;
  std::vector<int> valuations;
};

/// Submodule of (Z/2^e)^length spanned by the generators.
class ChainCode {
 public:
  ChainCode(int length, int exponent, std::vector<std::vector<std::uint32_t>> generators);
  /// Rows of an integer matrix reduced mod 2^e.
  static ChainCode from_matrix(const IntMatrix& m, int exponent);

  int length() const { return length_; }
  int exponent() const { return exponent_; }
  std::uint32_t modulus() const { return std::uint32_t{1} << exponent_; }
  const ChainForm& form() const { return form_; }
  /// log_2 of the number of codewords.
  int log2_size() const;
  bool contains(std::span<const Int> v) const;

 private:
  int length_;
  int exponent_;
  ChainForm form_;
};

/// Gamma_nu = K_nu / K_{nu+1} for nu = 0..e-1, where K_nu is the set of
/// codewords divisible by 2^nu; each quotient is divided by 2^nu and
/// reduced mod 2.
std::vector<CodeF2> filtration(const ChainCode& code);

}  // namespace frobinc::codes
