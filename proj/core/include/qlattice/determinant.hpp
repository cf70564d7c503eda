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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlattice/bigint.hpp"
#include "qlattice/matrix.hpp"

namespace qlattice {

/// (alpha - beta)^{nu-1} (nu beta + alpha - beta).
BigInt det_phi_closed(const PhiSpec& spec);

/// Signed determinant by single-step fraction-free (Bareiss) elimination.
/// Pivots are the first nonzero entry of each column, row swaps flip the
/// sign. Every division in the recurrence is checked to be exact.
BigInt det_exact(const IntMatrix& m);

/// Number of bits of the Hadamard bound prod_i ||row_i||_2, rounded up.
/// Zero when some row vanishes.
std::size_t hadamard_bits(const IntMatrix& m);

/// Signed determinant from residues modulo primes just below 2^62, combined
/// by the Chinese remainder theorem. The number of primes covers twice the
/// Hadamard bound plus one spare prime. Residues for different primes are
/// computed on up to `threads` worker threads (0 = hardware concurrency);
/// the result does not depend on the schedule.
BigInt det_modular(const IntMatrix& m, unsigned threads = 0);

/// Determinant of m modulo a prime p < 2^62.
std::uint64_t det_mod_prime(const IntMatrix& m, std::uint64_t p);

/// The first `count` primes below 2^62, in decreasing order.
std::vector<std::uint64_t> crt_primes(std::size_t count);

}  // namespace qlattice
