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

#include "frobinc/bruteforce.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "frobinc/bigint.hpp"
#include "frobinc/error.hpp"
#include "frobinc/polycount.hpp"
#include "frobinc/subspace.hpp"

namespace frobinc::brute {

namespace {

std::uint64_t checked_power(std::uint64_t q, int nu) {
  if (nu < 1) throw DomainError("nu must be positive");
  unsigned __int128 v = 1;
  for (int i = 0; i < nu; ++i) {
    v *= q;
    if (v > gfq::kMaxFieldSize) {
      throw CapacityError("field of order " + std::to_string(q) + "^" + std::to_string(nu) +
                          " exceeds the enumeration bound 2^20");
    }
  }
  return static_cast<std::uint64_t>(v);
}

unsigned worker_count(unsigned requested, std::size_t items) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(items, 1)));
}

// Sums body(i) over i in [0, count) on contiguous chunks; the total does not
// depend on the schedule.
template <typename Body>
std::uint64_t parallel_sum(std::size_t count, unsigned threads, Body body) {
  const unsigned workers = worker_count(threads, count);
  if (workers <= 1) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) total += body(i);
    return total;
  }
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) partial[w] += body(i);
    });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace

std::uint64_t count_points(int n, int l, int c, std::uint64_t r, std::uint64_t s, int nu,
                           const CountOptions& options) {
  poly::common_characteristic(r, s);
  if (l < 1 || c < 1 || l + c >= n) throw DomainError("count_points needs l >= 1, c >= 1 and l + c < n");
  const std::uint64_t q = r * s;
  const std::uint64_t order = checked_power(q, nu);
  auto field = gfq::Field::of_order(order);

  const std::uint64_t n_l = gfq::subspace_count(order, n, l);
  const std::uint64_t n_m = gfq::subspace_count(order, n, n - c);
  const unsigned __int128 pairs = static_cast<unsigned __int128>(n_l) * n_m;
  if (pairs > options.max_pairs) {
    throw CapacityError("pair budget exceeded: need " + std::to_string(n_l) + " x " + std::to_string(n_m) +
                        " pairs, budget is " + std::to_string(options.max_pairs));
  }

  const auto Ls = gfq::enumerate_subspaces(field, n, l, options.max_subspaces);

  if (options.naive) {
    const auto Ms = gfq::enumerate_subspaces(field, n, n - c, options.max_subspaces);
    std::vector<gfq::Subspace> Ms_s;
    Ms_s.reserve(Ms.size());
    for (const auto& M : Ms) Ms_s.push_back(gfq::frobenius_image(M, s));
    return parallel_sum(Ls.size(), options.threads, [&](std::size_t i) {
      const auto Lr = gfq::frobenius_image(Ls[i], r);
      std::uint64_t hits = 0;
      for (std::size_t j = 0; j < Ms.size(); ++j) {
        if (Ms[j].contains(Lr) && Ms_s[j].contains(Ls[i])) ++hits;
      }
      return hits;
    });
  }

  // M -> M^s permutes the F_{q^nu}-rational subspaces, so the number of M
  // with L + L^q in M^s is the number of codim-c subspaces containing
  // K = L + L^q.
  return parallel_sum(Ls.size(), options.threads, [&](std::size_t i) {
    const int k = gfq::sum(Ls[i], gfq::frobenius_image(Ls[i], q)).dim();
    return gfq::subspace_count(order, n - k, n - c - k);
  });
}

std::uint64_t count_stratum(int n, int l, std::uint64_t q, int d, int nu, const CountOptions& options) {
  if (n < 0 || l < 0 || l > n) throw DomainError("count_stratum needs 0 <= l <= n");
  const std::uint64_t order = checked_power(q, nu);
  auto field = gfq::Field::of_order(order);
  if (!field->is_power_of_characteristic(q)) throw InvalidFrobenius("q must be a power of the characteristic");
  if (d < 0 || d > l) return 0;
  const auto Ls = gfq::enumerate_subspaces(field, n, l, options.max_subspaces);
  return parallel_sum(Ls.size(), options.threads, [&](std::size_t i) -> std::uint64_t {
    return gfq::intersect(Ls[i], gfq::frobenius_image(Ls[i], q)).dim() == d ? 1 : 0;
  });
}

}  // namespace frobinc::brute
