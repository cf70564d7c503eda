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
#include <optional>
#include <string>
#include <vector>

#include "qlattice/field.hpp"
#include "qlattice/lattice.hpp"
#include "qlattice/matrix.hpp"
#include "qlattice/qcount.hpp"

namespace qlattice {

/// Incidence between points and hyperplanes of GF(q)^n. Both sides are
/// indexed by the canonical point order, hyperplane j being v_j^perp:
///   A(i, j) = 1 iff v_i lies in v_j^perp,   B = J - A.
struct IncidencePair {
  std::size_t n = 0;
  std::uint32_t q = 0;
  FieldPtr field;
  std::vector<ProjPoint> points;
  std::vector<Subspace> hyperplanes;
  IntMatrix A;
  IntMatrix B;

  std::size_t size() const { return points.size(); }
};

/// Throws InvalidArgument for n < 2.
IncidencePair build_incidence(std::size_t n, const FieldPtr& field);

/// One predicted-vs-witnessed comparison of a matrix product against a Phi
/// pattern.
struct IdentityCheck {
  std::string name;
  PhiSpec predicted;
  std::optional<PhiSpec> witnessed;
  bool pass = false;
};

/// Checks A^2, B^2 and AB against their predicted Phi patterns:
///   A^2 = Phi(N, [n-1 choose n-2], [n-2 choose n-3])
///   B^2 = Phi(N, q^{n-1}, q^{n-2}(q-1))
///   AB  = Phi(N, 0, q^{n-2})
std::vector<IdentityCheck> verify_square_identities(const IncidencePair& pair);

/// True when every row and every column of m sums to `expected`.
bool has_line_sums(const IntMatrix& m, const BigInt& expected);

/// q^{(n-2)N+n}, the value of det(B^2).
QCount det_B_squared_closed(std::size_t n, std::uint64_t q);
/// |det B| = q^{((n-2)N+n)/2}.
QCount det_B_closed(std::size_t n, std::uint64_t q);
/// |det A| = q^{(n-2)(N-1)/2} [n-1].
QCount det_A_closed(std::size_t n, std::uint64_t q);
/// |det A| via |det AB| = (N-1) q^{N(n-2)}: (N-1) q^{(N(n-2)-n)/2}.
QCount det_AB_alternative(std::size_t n, std::uint64_t q);

}  // namespace qlattice
