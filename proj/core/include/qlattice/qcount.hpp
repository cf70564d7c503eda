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

// Closed-form counts for the subspace lattice of GF(q)^n. Everything here is
// a polynomial identity in q, so q is a plain integer >= 2 and need not be a
// prime power. Every division is checked for a zero remainder.

#include <cstdint>

#include "qlattice/bigint.hpp"

namespace qlattice {

/// Exact non-negative count.
using QCount = BigInt;

/// [i]_q = (q^i - 1) / (q - 1) = 1 + q + ... + q^{i-1}.
QCount q_int(std::int64_t i, std::uint64_t q);

/// Gaussian binomial; zero for j < 0 or j > n.
QCount q_binom(std::int64_t n, std::int64_t j, std::uint64_t q);

/// |GL(n, q)| = (q^n - 1)(q^n - q) ... (q^n - q^{n-1}).
QCount gl_order(std::uint64_t n, std::uint64_t q);

/// Ordered n-tuples of projective points forming a basis.
QCount t_count(std::uint64_t n, std::uint64_t q);
/// Unordered bases of projective points, t_count / n!.
QCount s_count(std::uint64_t n, std::uint64_t q);

/// Ordered completions of a fixed independent j-set to a basis:
/// q^{(n(n-1) - j(j-1))/2} * prod_{k=1}^{n-j} [k].
QCount t_fixed(std::uint64_t n, std::uint64_t j, std::uint64_t q);
/// Unordered completions, t_fixed / (n-j)!.
QCount s_fixed(std::uint64_t n, std::uint64_t j, std::uint64_t q);

/// Maximal chains from 0 to GF(q)^n: prod_{k=1}^n [k].
QCount p_count(std::uint64_t n, std::uint64_t q);

}  // namespace qlattice
