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

#include "qlattice/determinant.hpp"

#include <cmath>
#include <mutex>
#include <thread>
#include <utility>

#include "qlattice/error.hpp"

namespace qlattice {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Shoup multiplication by a fixed factor f < p: precomputes floor(f 2^64 / p).
struct ShoupFactor {
  u64 f;
  u64 f_prime;

  ShoupFactor(u64 factor, u64 p) : f(factor), f_prime(static_cast<u64>((static_cast<u128>(factor) << 64) / p)) {}

  u64 times(u64 x, u64 p) const {
    const u64 q_hat = static_cast<u64>((static_cast<u128>(x) * f_prime) >> 64);
    const u64 r = x * f - q_hat * p;
    return r >= p ? r - p : r;
  }
};

}  // namespace

BigInt det_phi_closed(const PhiSpec& spec) {
  if (spec.nu == 0) throw InvalidArgument("Phi matrix needs nu >= 1");
  const BigInt diff = spec.alpha - spec.beta;
  return pow(diff, spec.nu - 1) * (BigInt(static_cast<unsigned long>(spec.nu)) * spec.beta + diff);
}

BigInt det_exact(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  auto at = [&a, n](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

  int sign = 1;
  BigInt prev = 1;
  BigInt rem;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(pivot, j), at(k, j));
      sign = -sign;
    }
    mpz_srcptr pkk = at(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < n; ++i) {
      mpz_srcptr pik = at(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_ptr x = at(i, j).get_mpz_t();
        mpz_mul(x, x, pkk);
        mpz_submul(x, pik, at(k, j).get_mpz_t());
        mpz_tdiv_qr(x, rem.get_mpz_t(), x, prev.get_mpz_t());
        if (rem != 0) throw InternalError("det_exact: inexact Bareiss division");
      }
    }
    prev = at(k, k);
  }
  BigInt det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

std::size_t hadamard_bits(const IntMatrix& m) {
  double log2_bound = 0.0;
  BigInt norm2;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    norm2 = 0;
    for (const auto& x : m.row(i)) mpz_addmul(norm2.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
    if (norm2 == 0) return 0;
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, norm2.get_mpz_t());
    log2_bound += 0.5 * (static_cast<double>(exp2) + std::log2(mant));
  }
  // Small slack against rounding in the floating-point sum.
  return static_cast<std::size_t>(std::ceil(log2_bound + 1e-6 * (1.0 + log2_bound)));
}

std::vector<std::uint64_t> crt_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<u64> cache;
  std::lock_guard lock(mutex);
  u64 candidate = cache.empty() ? (u64{1} << 62) - 1 : cache.back() - 2;
  BigInt z;
  while (cache.size() < count) {
    z = static_cast<unsigned long>(candidate);
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) cache.push_back(candidate);
    candidate -= 2;
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::uint64_t det_mod_prime(const IntMatrix& m, std::uint64_t p) {
  const std::size_t n = m.dim();
  if (n == 0) return 1 % p;
  std::vector<u64> a(n * n);
  for (std::size_t k = 0; k < n * n; ++k) a[k] = mpz_fdiv_ui(m.entries()[k].get_mpz_t(), p);

  u64 det = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[pivot * n + j], a[k * n + j]);
      negate = !negate;
    }
    const u64 pkk = a[k * n + k];
    det = mulmod(det, pkk, p);
    const u64 inv = powmod(pkk, p - 2, p);
    const u64* pivot_row = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      u64* row = &a[i * n];
      if (row[k] == 0) continue;
      // row -= (row[k] / pkk) * pivot_row, written as row + (p - factor) * pivot_row.
      const ShoupFactor neg_factor(p - mulmod(row[k], inv, p), p);
      for (std::size_t j = k + 1; j < n; ++j) {
        u64 v = row[j] + neg_factor.times(pivot_row[j], p);
        row[j] = v >= p ? v - p : v;
      }
      row[k] = 0;
    }
  }
  return negate && det != 0 ? p - det : det;
}

BigInt det_modular(const IntMatrix& m, unsigned threads) {
  if (m.dim() == 0) return 1;
  const std::size_t bits = hadamard_bits(m);
  if (bits == 0) return 0;
  // Each prime exceeds 2^61; the product must exceed 2^{bits+1}.
  const std::size_t count = (bits + 1 + 60) / 61 + 1;
  const std::vector<u64> primes = crt_primes(count);

  std::vector<u64> residues(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) residues[i] = det_mod_prime(m, primes[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += threads) residues[i] = det_mod_prime(m, primes[i]);
      });
    }
    for (auto& t : pool) t.join();
  }

  // Incremental CRT: x mod modulus, then lift by each further prime.
  BigInt x = static_cast<unsigned long>(residues[0]);
  BigInt modulus = static_cast<unsigned long>(primes[0]);
  for (std::size_t i = 1; i < count; ++i) {
    const u64 p = primes[i];
    const u64 x_mod = mpz_fdiv_ui(x.get_mpz_t(), p);
    const u64 m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    const u64 delta = residues[i] >= x_mod ? residues[i] - x_mod : residues[i] + (p - x_mod);
    const u64 t = mulmod(delta, powmod(m_mod, p - 2, p), p);
    mpz_addmul_ui(x.get_mpz_t(), modulus.get_mpz_t(), t);
    modulus *= static_cast<unsigned long>(p);
  }
  if (2 * x > modulus) x -= modulus;
  return x;
}

}  // namespace qlattice
