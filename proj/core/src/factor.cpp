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

#include "qlattice/factor.hpp"

#include <algorithm>

#include "qlattice/error.hpp"

namespace qlattice {

BigInt Factorization::value() const {
  if (sign == 0) return 0;
  BigInt v = residual;
  for (const auto& [p, e] : factors) v *= pow(BigInt(static_cast<unsigned long>(p)), e);
  return sign < 0 ? BigInt(-v) : v;
}

Factorization factorize(const BigInt& v, std::uint64_t bound) {
  if (bound < 2) throw InvalidArgument("factorization bound must be at least 2");
  Factorization out;
  out.sign = sgn(v);
  if (out.sign == 0) return out;
  BigInt rest = abs(v);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    const std::uint64_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(),
                                       BigInt(static_cast<unsigned long>(p)).get_mpz_t());
    if (e > 0) out.factors.emplace_back(p, e);
    if (rest == 1) break;
  }
  out.residual = rest;
  return out;
}

std::string render_factored(const Factorization& f, std::uint64_t leading_prime) {
  if (f.sign == 0) return "0";
  auto factors = f.factors;
  std::stable_partition(factors.begin(), factors.end(),
                        [&](const auto& pe) { return pe.first == leading_prime; });
  std::string out;
  for (const auto& [p, e] : factors) {
    if (!out.empty()) out += "·";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (f.residual != 1) {
    if (!out.empty()) out += "·";
    out += f.residual.get_str();
  }
  return out.empty() ? "1" : out;
}

}  // namespace qlattice
