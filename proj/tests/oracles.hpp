// Copyright 2026 The qlattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference implementations used only by the tests. Each one is written
// independently of the library: plain integers mod p, full enumeration,
// rational arithmetic. They are slow on purpose.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qlattice/matrix.hpp"

namespace oracle {

using IntVec = std::vector<std::uint32_t>;

inline std::uint32_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  for (; e; e >>= 1, a = a * a % p)
    if (e & 1) r = r * a % p;
  return static_cast<std::uint32_t>(r);
}

// Rank of the rows over Z/p, p prime.
inline std::size_t rank_mod_p(std::vector<IntVec> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = mod_pow(rows[rank][c], p - 2, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::uint64_t f = rows[r][c] * inv % p;
      for (std::size_t k = 0; k < cols; ++k)
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + (p - f) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

// Projective points of (Z/p)^n: first nonzero coordinate is 1, listed in
// increasing base-p value with the first coordinate most significant.
inline std::vector<IntVec> projective_points(std::size_t n, std::uint32_t p) {
  std::vector<IntVec> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    IntVec v(n);
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0; c /= p) v[i] = static_cast<std::uint32_t>(c % p);
    const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (*lead == 1) out.push_back(v);
  }
  return out;
}

inline std::uint32_t dot_mod_p(const IntVec& a, const IntVec& b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::uint64_t{a[i]} * b[i];
  return static_cast<std::uint32_t>(s % p);
}

// Every subspace of (Z/p)^n as the sorted set of indices of the projective
// points it contains, found by closing spans of point sets.
inline std::set<std::vector<std::size_t>> all_subspaces(std::size_t n, std::uint32_t p) {
  const auto pts = projective_points(n, p);
  std::set<std::vector<std::size_t>> found{{}};
  std::vector<std::vector<std::size_t>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : frontier) {
      for (std::size_t add = 0; add < pts.size(); ++add) {
        if (std::binary_search(w.begin(), w.end(), add)) continue;
        std::vector<IntVec> basis;
        for (std::size_t i : w) basis.push_back(pts[i]);
        basis.push_back(pts[add]);
        const std::size_t r = rank_mod_p(basis, p);
        std::vector<std::size_t> closure;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          auto ext = basis;
          ext.push_back(pts[i]);
          if (rank_mod_p(ext, p) == r) closure.push_back(i);
        }
        if (found.insert(closure).second) next.push_back(closure);
      }
    }
    frontier = std::move(next);
  }
  return found;
}

// Number of maximal chains 0 < V1 < ... < Vn, by dynamic programming over
// the subspace list from all_subspaces.
inline mpz_class maximal_chains(std::size_t n, std::uint32_t p) {
  const auto subs = all_subspaces(n, p);
  std::vector<std::vector<std::size_t>> list(subs.begin(), subs.end());
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<mpz_class> ways(list.size(), 0);
  ways[0] = 1;  // the zero subspace
  std::vector<std::size_t> dim(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::size_t d = 0;
    for (std::size_t s = list[i].size(); s > 0; s = (s - 1) / p) ++d;
    dim[i] = d;
  }
  for (std::size_t i = 1; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (dim[j] + 1 == dim[i] && std::includes(list[i].begin(), list[i].end(), list[j].begin(), list[j].end()))
        ways[i] += ways[j];
  return ways.back();
}

// Ordered (n-j)-tuples of projective points completing e_1..e_j to a basis.
inline mpz_class ordered_completions(std::size_t n, std::size_t j, std::uint32_t p) {
  const auto pts = projective_points(n, p);
  std::vector<IntVec> fixed;
  for (std::size_t i = 0; i < j; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    fixed.push_back(e);
  }
  const std::size_t len = n - j;
  std::vector<std::size_t> idx(len, 0);
  mpz_class count = 0;
  if (len == 0) return 1;
  while (true) {
    auto rows = fixed;
    for (std::size_t k : idx) rows.push_back(pts[k]);
    if (rank_mod_p(rows, p) == n) ++count;
    std::size_t k = 0;
    while (k < len && ++idx[k] == pts.size()) idx[k++] = 0;
    if (k == len) break;
  }
  return count;
}

// All q^{n^2} matrices over Z/p, counting the invertible ones.
inline mpz_class invertible_matrices(std::size_t n, std::uint32_t p) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= p;
  mpz_class count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<IntVec> rows(n, IntVec(n));
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n * n; ++i, c /= p) rows[i / n][i % n] = static_cast<std::uint32_t>(c % p);
    if (rank_mod_p(rows, p) == n) ++count;
  }
  return count;
}

// Leibniz expansion over all permutations.
inline mpz_class det_leibniz(const qlattice::IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    mpz_class term = sign;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Gaussian elimination over Q.
inline mpz_class det_rational(const qlattice::IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.get_num();
}

// GF(2^k) product: carry-less multiply, then reduce by the modulus bits.
inline std::uint32_t gf2_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus_bits, unsigned k) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < 32; ++i)
    if (b >> i & 1) prod ^= std::uint64_t{a} << i;
  for (int bit = 63; bit >= static_cast<int>(k); --bit)
    if (prod >> bit & 1) prod ^= std::uint64_t{modulus_bits} << (bit - k);
  return static_cast<std::uint32_t>(prod);
}

inline qlattice::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  qlattice::IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace oracle
