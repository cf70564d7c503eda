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

#include "qlattice/qcount.hpp"

#include <string>

#include "qlattice/error.hpp"

namespace qlattice {

namespace {

void require_q(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be at least 2, got " + std::to_string(q));
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

QCount q_int_product(std::uint64_t upto, std::uint64_t q) {
  QCount out = 1;
  for (std::uint64_t k = 1; k <= upto; ++k) out *= q_int(static_cast<std::int64_t>(k), q);
  return out;
}

}  // namespace

QCount q_int(std::int64_t i, std::uint64_t q) {
  require_q(q);
  if (i < 0) throw InvalidArgument("q-integer index must be non-negative");
  return divide_exact(pow(big(q), static_cast<std::uint64_t>(i)) - 1, big(q - 1), "q_int");
}

QCount q_binom(std::int64_t n, std::int64_t j, std::uint64_t q) {
  require_q(q);
  if (n < 0) throw InvalidArgument("q_binom needs n >= 0");
  if (j < 0 || j > n) return 0;
  QCount num = 1, den = 1;
  for (std::int64_t k = 0; k < j; ++k) {
    num *= q_int(n - k, q);
    den *= q_int(k + 1, q);
  }
  return divide_exact(num, den, "q_binom");
}

QCount gl_order(std::uint64_t n, std::uint64_t q) {
  require_q(q);
  if (n == 0) throw InvalidArgument("gl_order needs n >= 1");
  const BigInt qn = pow(big(q), n);
  QCount out = 1;
  for (std::uint64_t k = 0; k < n; ++k) out *= qn - pow(big(q), k);
  return out;
}

QCount t_count(std::uint64_t n, std::uint64_t q) {
  const QCount via_gl = divide_exact(gl_order(n, q), pow(big(q - 1), n), "t_count");
  const QCount via_product = pow(big(q), n * (n - 1) / 2) * q_int_product(n, q);
  if (via_gl != via_product) throw InternalError("t_count: the two product forms disagree");
  return via_product;
}

QCount s_count(std::uint64_t n, std::uint64_t q) {
  return divide_exact(t_count(n, q), factorial(n), "s_count");
}

QCount t_fixed(std::uint64_t n, std::uint64_t j, std::uint64_t q) {
  require_q(q);
  if (j > n) throw InvalidArgument("t_fixed needs j <= n");
  const std::uint64_t twice = n * (n - (n > 0 ? 1 : 0)) - j * (j - (j > 0 ? 1 : 0));
  if (twice % 2 != 0) throw InternalError("t_fixed: odd exponent");
  return pow(big(q), twice / 2) * q_int_product(n - j, q);
}

QCount s_fixed(std::uint64_t n, std::uint64_t j, std::uint64_t q) {
  return divide_exact(t_fixed(n, j, q), factorial(n - j), "s_fixed");
}

QCount p_count(std::uint64_t n, std::uint64_t q) {
  require_q(q);
  if (n == 0) throw InvalidArgument("p_count needs n >= 1");
  return q_int_product(n, q);
}

}  // namespace qlattice
