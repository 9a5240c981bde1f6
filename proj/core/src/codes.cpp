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


#include "frobinc/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <thread>

#include "frobinc/error.hpp"

namespace frobinc::codes {

Word make_word(int length) { return Word(static_cast<std::size_t>((length + 63) / 64), 0); }

Word word_from_bits(std::span<const int> bits) {
  Word w = make_word(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) set_bit(w, static_cast<int>(i), bits[i] & 1);
  return w;
}

bool get_bit(const Word& w, int i) { return (w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u; }

void set_bit(Word& w, int i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (v) w[static_cast<std::size_t>(i) / 64] |= mask;
  else w[static_cast<std::size_t>(i) / 64] &= ~mask;
}

int weight(const Word& w) {
  int total = 0;
  for (auto x : w) total += std::popcount(x);
  return total;
}

namespace {

void xor_into(Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

int lowest_bit(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
  }
  return -1;
}

}  // namespace

CodeF2 CodeF2::span(int length, const std::vector<Word>& words) {
  CodeF2 code(length);
  const std::size_t nwords = make_word(length).size();
  for (Word w : words) {
    if (w.size() != nwords) throw DimensionError("word length does not match the code");
    for (std::size_t i = 0; i < code.rows_.size(); ++i) {
      if (get_bit(w, code.pivots_[i])) xor_into(w, code.rows_[i]);
    }
    const int p = lowest_bit(w);
    if (p < 0) continue;
    for (auto& r : code.rows_) {
      if (get_bit(r, p)) xor_into(r, w);
    }
    const auto pos = std::lower_bound(code.pivots_.begin(), code.pivots_.end(), p) - code.pivots_.begin();
    code.pivots_.insert(code.pivots_.begin() + pos, p);
    code.rows_.insert(code.rows_.begin() + pos, std::move(w));
  }
  return code;
}

bool CodeF2::contains(const Word& word) const {
  Word w = word;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (get_bit(w, pivots_[i])) xor_into(w, rows_[i]);
  }
  return lowest_bit(w) < 0;
}

CodeF2 dual(const CodeF2& code) {
  const int n = code.length();
  std::vector<bool> is_pivot(n, false);
  for (int p : code.pivots()) is_pivot[p] = true;
  std::vector<Word> words;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Word d = make_word(n);
    set_bit(d, j, true);
    for (int i = 0; i < code.dim(); ++i) {
      if (get_bit(code.rows()[i], j)) set_bit(d, code.pivots()[i], true);
    }
    words.push_back(std::move(d));
  }
  return CodeF2::span(n, words);
}

CodeF2 even_weight_code(int length) {
  std::vector<Word> words;
  for (int j = 1; j < length; ++j) {
    Word w = make_word(length);
    set_bit(w, 0, true);
    set_bit(w, j, true);
    words.push_back(std::move(w));
  }
  return CodeF2::span(length, words);
}

Int WeightEnum::total() const {
  Int t = 0;
  for (const auto& c : coeffs) t += c;
  return t;
}

int WeightEnum::min_nonzero_weight() const {
  for (std::size_t w = 1; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) return static_cast<int>(w);
  }
  return -1;
}

std::string WeightEnum::to_lines() const {
  std::ostringstream os;
  for (std::size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) os << w << ' ' << coeffs[w].get_str() << '\n';
  }
  return os.str();
}

namespace {

// Histogram of weights over the cosets prefix * high + span(low), for
// prefixes in [lo, hi). `rows` holds the generators, low ones first.
template <std::size_t W>
void enumerate_range(const std::vector<std::array<std::uint64_t, W>>& rows, int low, std::uint64_t lo,
                     std::uint64_t hi, std::vector<std::uint64_t>& hist) {
  const std::uint64_t steps = std::uint64_t{1} << low;
  for (std::uint64_t prefix = lo; prefix < hi; ++prefix) {
    std::array<std::uint64_t, W> cur{};
    for (std::size_t b = 0; (prefix >> b) != 0; ++b) {
      if ((prefix >> b) & 1u) {
        for (std::size_t k = 0; k < W; ++k) cur[k] ^= rows[static_cast<std::size_t>(low) + b][k];
      }
    }
    auto count = [&] {
      int wt = 0;
      for (std::size_t k = 0; k < W; ++k) wt += std::popcount(cur[k]);
      ++hist[static_cast<std::size_t>(wt)];
    };
    count();
    for (std::uint64_t i = 1; i < steps; ++i) {
      const auto& g = rows[static_cast<std::size_t>(std::countr_zero(i))];
      for (std::size_t k = 0; k < W; ++k) cur[k] ^= g[k];
      count();
    }
  }
}

template <std::size_t W>
std::vector<std::uint64_t> enumerate_words(const CodeF2& code, unsigned threads) {
  std::vector<std::array<std::uint64_t, W>> rows;
  for (const auto& r : code.rows()) {
    std::array<std::uint64_t, W> a{};
    std::copy(r.begin(), r.end(), a.begin());
    rows.push_back(a);
  }
  const int dim = code.dim();
  const unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  int high = 0;
  while ((1u << high) < workers && high < dim) ++high;
  const int low = dim - high;
  const std::uint64_t prefixes = std::uint64_t{1} << high;
  const std::size_t bins = static_cast<std::size_t>(code.length()) + 1;
  std::vector<std::vector<std::uint64_t>> hists(prefixes, std::vector<std::uint64_t>(bins, 0));
  if (prefixes == 1) {
    enumerate_range(rows, low, 0, 1, hists[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t p = 0; p < prefixes; ++p) {
      pool.emplace_back([&, p] { enumerate_range(rows, low, p, p + 1, hists[p]); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> total(bins, 0);
  for (const auto& h : hists)
    for (std::size_t i = 0; i < bins; ++i) total[i] += h[i];
  return total;
}

}  // namespace

WeightEnum weight_enumerator_direct(const CodeF2& code, int max_dim, unsigned threads) {
  if (code.dim() > max_dim) {
    throw CapacityError("code dimension " + std::to_string(code.dim()) + " exceeds the enumeration budget " +
                        std::to_string(max_dim) + "; use the dual code and MacWilliams");
  }
  if (code.dim() > 62) throw CapacityError("code dimension too large to enumerate");
  std::vector<std::uint64_t> hist;
  switch (make_word(code.length()).size()) {
    case 0:
    case 1: hist = enumerate_words<1>(code, threads); break;
    case 2: hist = enumerate_words<2>(code, threads); break;
    case 3: hist = enumerate_words<3>(code, threads); break;
    case 4: hist = enumerate_words<4>(code, threads); break;
    default: throw CapacityError("direct enumeration supports lengths up to 256");
  }
  WeightEnum out;
  out.coeffs.reserve(hist.size());
  for (auto c : hist) out.coeffs.emplace_back(static_cast<unsigned long>(c));
  return out;
}

WeightEnum macwilliams(const WeightEnum& e, int dim, int length) {
  if (e.length() != length) throw DimensionError("enumerator length does not match");
  std::vector<std::vector<Int>> binom(length + 1, std::vector<Int>(length + 1, 0));
  for (int a = 0; a <= length; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : Int(0));
  }
  const Int scale = int_pow(2, static_cast<unsigned long>(dim));
  WeightEnum out;
  out.coeffs.assign(static_cast<std::size_t>(length) + 1, 0);
  for (int j = 0; j <= length; ++j) {
    Int acc = 0;
    for (int w = 0; w <= length; ++w) {
      const Int& a = e.coeffs[w];
      if (a == 0) continue;
      // Krawtchouk value K_j(w) = sum_i (-1)^i C(w, i) C(length - w, j - i).
      Int k = 0;
      for (int i = std::max(0, j - (length - w)); i <= std::min(j, w); ++i) {
        const Int term = binom[w][i] * binom[length - w][j - i];
        if (i % 2) k -= term;
        else k += term;
      }
      acc += a * k;
    }
    if (!mpz_divisible_p(acc.get_mpz_t(), scale.get_mpz_t())) {
      throw ConsistencyError("MacWilliams transform is not integral at weight " + std::to_string(j));
    }
    mpz_divexact(out.coeffs[j].get_mpz_t(), acc.get_mpz_t(), scale.get_mpz_t());
  }
  return out;
}

namespace {

std::uint32_t unit_inverse(std::uint32_t u, std::uint32_t mask) {
  std::uint32_t x = u;  // correct mod 8 for odd u
  for (int i = 0; i < 5; ++i) x *= 2u - u * x;
  return x & mask;
}

}  // namespace

ChainCode::ChainCode(int length, int exponent, std::vector<std::vector<std::uint32_t>> generators)
    : length_(length), exponent_(exponent) {
  if (exponent < 1 || exponent > 31) throw DomainError("chain code exponent must be in [1, 31]");
  const std::uint32_t mask = modulus() - 1;
  auto& rows = generators;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != length) throw DimensionError("generator length does not match the code");
    for (auto& x : r) x &= mask;
  }
  std::vector<bool> used(length, false);
  while (true) {
    int best_val = exponent, bi = -1, bc = -1;
    for (std::size_t i = 0; i < rows.size() && best_val > 0; ++i) {
      for (int c = 0; c < length; ++c) {
        if (used[c] || rows[i][c] == 0) continue;
        const int v = std::countr_zero(rows[i][c]);
        if (v < best_val) {
          best_val = v;
          bi = static_cast<int>(i);
          bc = c;
          if (v == 0) break;
        }
      }
    }
    if (bi < 0) break;
    auto row = std::move(rows[bi]);
    rows.erase(rows.begin() + bi);
    const std::uint32_t inv = unit_inverse(row[bc] >> best_val, mask);
    for (auto& x : row) x = (x * inv) & mask;
    for (auto& other : rows) {
      const std::uint32_t a = other[bc];
      if (a == 0) continue;
      const std::uint32_t t = a >> best_val;
      for (int c = 0; c < length; ++c) other[c] = (other[c] - t * row[c]) & mask;
    }
    used[bc] = true;
    form_.rows.push_back(std::move(row));
    form_.pivots.push_back(bc);
    form_.valuations.push_back(best_val);
  }
}

ChainCode ChainCode::from_matrix(const IntMatrix& m, int exponent) {
  std::vector<std::vector<std::uint32_t>> gens;
  Int r;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::uint32_t> g(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r_2exp(r.get_mpz_t(), m(i, j).get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
      g[j] = static_cast<std::uint32_t>(r.get_ui());
    }
    gens.push_back(std::move(g));
  }
  return ChainCode(m.cols(), exponent, std::move(gens));
}

int ChainCode::log2_size() const {
  int total = 0;
  for (int v : form_.valuations) total += exponent_ - v;
  return total;
}

bool ChainCode::contains(std::span<const Int> v) const {
  if (static_cast<int>(v.size()) != length_) throw DimensionError("word length does not match the code");
  const std::uint32_t mask = modulus() - 1;
  std::vector<std::uint32_t> w(length_);
  Int r;
  for (int j = 0; j < length_; ++j) {
    mpz_fdiv_r_2exp(r.get_mpz_t(), v[j].get_mpz_t(), static_cast<mp_bitcnt_t>(exponent_));
    w[j] = static_cast<std::uint32_t>(r.get_ui());
  }
  for (std::size_t i = 0; i < form_.rows.size(); ++i) {
    const std::uint32_t a = w[form_.pivots[i]];
    const int val = form_.valuations[i];
    if (a & ((std::uint32_t{1} << val) - 1)) return false;
    const std::uint32_t t = a >> val;
    for (int c = 0; c < length_; ++c) w[c] = (w[c] - t * form_.rows[i][c]) & mask;
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<CodeF2> filtration(const ChainCode& code) {
  std::vector<CodeF2> out;
  const auto& f = code.form();
  for (int nu = 0; nu < code.exponent(); ++nu) {
    std::vector<Word> words;
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
      if (f.valuations[i] > nu) continue;
      Word w = make_word(code.length());
      for (int c = 0; c < code.length(); ++c) set_bit(w, c, (f.rows[i][c] >> f.valuations[i]) & 1u);
      words.push_back(std::move(w));
    }
    out.push_back(CodeF2::span(code.length(), words));
  }
  return out;
}

}  // namespace frobinc::codes
