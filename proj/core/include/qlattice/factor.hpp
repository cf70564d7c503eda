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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qlattice/bigint.hpp"

namespace qlattice {

/// sign * prod p^e * residual == value. `residual` holds whatever has no
/// prime factor <= the trial-division bound; it is 1 when fully factored.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;  // (prime, exponent), ascending
  BigInt residual = 1;

  BigInt value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

inline constexpr std::uint64_t kDefaultFactorBound = 1000;

/// Trial division by the primes <= bound. Zero gives sign 0, no factors.
Factorization factorize(const BigInt& v, std::uint64_t bound = kDefaultFactorBound);

/// Renders |value| as "2^14·7": ascending primes joined by U+00B7, bare primes
/// for exponent 1, the residual last when it is not 1. Renders "1" and "0" for
/// those values. The sign is not shown. A nonzero `leading_prime` that occurs
/// in the factorization is moved to the front ("3^180·2^3·5").
std::string render_factored(const Factorization& f, std::uint64_t leading_prime = 0);

}  // namespace qlattice
