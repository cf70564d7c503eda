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

// Combinatorial side of the Gorenstein algebra attached to the subspace
// lattice. The algebra itself is never built as a quotient ring. What is
// materialized instead:
//   * the dual generator F, as its set of monomials (bases of GF(q)^n made of
//     projective points);
//   * degree-1 and degree-(n-1) components, through their monomial bases
//     x_i and x_j^perp = prod_{v_k in v_j^perp} x_k, both indexed by points;
//   * the top component, through a single socle monomial g; every pairing
//     into it is an integer multiple of g.

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

/// Monomials of the dual generator: strictly increasing 0-based index tuples
/// into the canonical point list, each spanning GF(q)^n, in lexicographic
/// order.
struct BasisSet {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::size_t num_points = 0;
  std::vector<std::vector<std::uint32_t>> bases;
};

/// Throws InvalidArgument for n < 2 and BudgetExceeded past `budget`
/// candidate tests.
BasisSet build_basis_set(std::size_t n, const FieldPtr& field, std::uint64_t budget = kDefaultBudget);

/// Hessian of F evaluated at X_1 = ... = X_N = 1. F is square-free, so the
/// diagonal is zero and entry (i, j) counts the bases containing both v_i and
/// v_j.
IntMatrix hessian_at_ones(const BasisSet& bs);

/// Matrix of the pairing A_1 x A_{n-1} -> A_n in the bases x_i, x_j^perp, {g}:
/// x_i x_j^perp vanishes when x_i divides x_j^perp, and is g otherwise.
/// Divisibility is decided from the bilinear pairing v_i . v_j.
IntMatrix mu_matrix(std::size_t n, const FieldPtr& field);

/// Matrix M of multiplication by l^{n-2}, l = x_1 + ... + x_N, from A_1 to
/// A_{n-1}. M(j, i) counts ordered (n-2)-tuples (k_1, ..., k_{n-2}) of points
/// such that v_i, v_{k_1}, ..., v_{k_{n-2}} are n-1 distinct points spanning
/// v_j^perp.
struct LefschetzMatrix {
  IntMatrix M;
  /// t_{n-1,1,q}.
  QCount scalar;
  /// Whether M == scalar * A.
  bool equals_scaled_incidence = false;
};

/// Exhaustive tuple count; throws BudgetExceeded when N^{n-1} > budget.
LefschetzMatrix lefschetz_matrix(std::size_t n, const FieldPtr& field, std::uint64_t budget = kDefaultBudget);

/// l^n F = n! F(1, ..., 1) = q^{n(n-1)/2} prod_{k=1}^n [k].
QCount ell_n_scalar(std::size_t n, std::uint64_t q);

/// |det Phi(N, 0, beta)| = (N - 1) beta^N, N = [n]_q.
QCount det_hessian_closed(std::size_t n, std::uint64_t q, const QCount& off_diag);

/// Which closed form describes the Hessian's off-diagonal constant.
enum class OffDiagonalMatch { kNeither, kOrdered, kUnordered, kBoth };

std::string to_string(OffDiagonalMatch m);

/// Comparison of the Hessian at ones with t_{n-1,1,q} / (n-2)! * AB and with
/// the two candidate patterns Phi(N, 0, t_{n,2,q}) and Phi(N, 0, s_{n,2,q}).
struct HessianFactorizationReport {
  std::size_t n = 0;
  std::uint32_t q = 0;
  IntMatrix hessian;
  /// t_{n-1,1,q} * AB / (n-2)!, the division checked entrywise.
  IntMatrix predicted;
  bool matches_product = false;
  std::optional<PhiSpec> witnessed;
  QCount ordered_candidate;    // t_{n,2,q}
  QCount unordered_candidate;  // s_{n,2,q}
  OffDiagonalMatch match = OffDiagonalMatch::kNeither;
};

HessianFactorizationReport verify_hessian_factorization(std::size_t n, const FieldPtr& field,
                                                        std::uint64_t budget = kDefaultBudget);

}  // namespace qlattice
