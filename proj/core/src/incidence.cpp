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

#include "qlattice/incidence.hpp"

#include "qlattice/error.hpp"

namespace qlattice {

namespace {

void require_n(std::size_t n) {
  if (n < 2) throw InvalidArgument("incidence needs n >= 2, got " + std::to_string(n));
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::uint64_t half_exponent(const BigInt& twice, const char* what) {
  if (twice < 0 || !mpz_even_p(twice.get_mpz_t())) throw InternalError(std::string(what) + ": odd exponent");
  return BigInt(twice / 2).get_ui();
}

}  // namespace

IncidencePair build_incidence(std::size_t n, const FieldPtr& field) {
  require_n(n);
  IncidencePair pair;
  pair.n = n;
  pair.q = field->order();
  pair.field = field;
  pair.points = enum_points(n, field);
  const std::size_t size = pair.points.size();
  pair.hyperplanes.reserve(size);
  for (const auto& v : pair.points) pair.hyperplanes.push_back(dual(span({&v, 1})));

  pair.A = IntMatrix(size);
  pair.B = IntMatrix(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const bool incident = contains(pair.hyperplanes[j], pair.points[i]);
      pair.A(i, j) = incident ? 1 : 0;
      pair.B(i, j) = incident ? 0 : 1;
    }
  }
  return pair;
}

std::vector<IdentityCheck> verify_square_identities(const IncidencePair& pair) {
  const std::size_t n = pair.n;
  const std::uint64_t q = pair.q;
  const std::size_t N = pair.size();
  const auto sn = static_cast<std::int64_t>(n);

  std::vector<IdentityCheck> checks;
  auto run = [&checks](std::string name, const IntMatrix& product, PhiSpec predicted) {
    IdentityCheck c{std::move(name), std::move(predicted), mat_is_phi(product), false};
    c.pass = c.witnessed && *c.witnessed == c.predicted;
    checks.push_back(std::move(c));
  };
  run("A^2", mat_mul(pair.A, pair.A), {N, q_binom(sn - 1, sn - 2, q), q_binom(sn - 2, sn - 3, q)});
  run("B^2", mat_mul(pair.B, pair.B), {N, pow(big(q), n - 1), pow(big(q), n - 2) * big(q - 1)});
  run("AB", mat_mul(pair.A, pair.B), {N, 0, pow(big(q), n - 2)});
  return checks;
}

bool has_line_sums(const IntMatrix& m, const BigInt& expected) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    BigInt row = 0, col = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      row += m(i, j);
      col += m(j, i);
    }
    if (row != expected || col != expected) return false;
  }
  return true;
}

QCount det_B_squared_closed(std::size_t n, std::uint64_t q) {
  require_n(n);
  const QCount N = q_int(static_cast<std::int64_t>(n), q);
  const BigInt exponent = BigInt(static_cast<unsigned long>(n - 2)) * N + static_cast<unsigned long>(n);
  return pow(big(q), exponent.get_ui());
}

QCount det_B_closed(std::size_t n, std::uint64_t q) {
  require_n(n);
  const QCount N = q_int(static_cast<std::int64_t>(n), q);
  const BigInt twice = BigInt(static_cast<unsigned long>(n - 2)) * N + static_cast<unsigned long>(n);
  return pow(big(q), half_exponent(twice, "det_B_closed"));
}

QCount det_A_closed(std::size_t n, std::uint64_t q) {
  require_n(n);
  const QCount N = q_int(static_cast<std::int64_t>(n), q);
  const BigInt twice = BigInt(static_cast<unsigned long>(n - 2)) * (N - 1);
  return pow(big(q), half_exponent(twice, "det_A_closed")) * q_int(static_cast<std::int64_t>(n - 1), q);
}

QCount det_AB_alternative(std::size_t n, std::uint64_t q) {
  require_n(n);
  const QCount N = q_int(static_cast<std::int64_t>(n), q);
  const BigInt twice = N * static_cast<unsigned long>(n - 2) - static_cast<unsigned long>(n);
  if (twice < 0) {
    // n = 2: |det AB| = N - 1 and |det B| = q, so |det A| = (N - 1) / q.
    return divide_exact(N - 1, big(q), "det_AB_alternative");
  }
  return (N - 1) * pow(big(q), half_exponent(twice, "det_AB_alternative"));
}

}  // namespace qlattice
