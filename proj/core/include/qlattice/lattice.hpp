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
#include <span>
#include <vector>

#include "qlattice/bigint.hpp"
#include "qlattice/field.hpp"

namespace qlattice {

using Vec = std::vector<FieldElement>;

/// Default step budget for exhaustive enumerations.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Integer value of `v` read as base-q digits, v[0] most significant. This is
/// the key of the canonical point order.
std::uint64_t vector_code(const Field& field, std::span<const FieldElement> v);
Vec vector_from_code(const Field& field, std::size_t n, std::uint64_t code);

/// A point of projective space: a nonzero vector whose first nonzero
/// coordinate is 1, together with its position in the canonical order.
struct ProjPoint {
  FieldPtr field;
  Vec coords;
  std::size_t index = 0;
};

/// A subspace of GF(q)^n, stored as its reduced row-echelon basis. Two
/// subspaces are equal iff their bases are identical.
class Subspace {
 public:
  /// Row space of `rows`; each row must have length n.
  Subspace(FieldPtr field, std::size_t n, std::vector<Vec> rows = {});

  static Subspace full(FieldPtr field, std::size_t n);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Membership by elimination against the basis.
  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  FieldPtr field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// All points of P^{n-1}(GF(q)) in canonical order (ascending vector_code).
std::vector<ProjPoint> enum_points(std::size_t n, const FieldPtr& field);

/// All j-dimensional subspaces, grouped by pivot pattern (patterns in
/// lexicographic order, free entries counted in base q within a pattern).
std::vector<Subspace> enum_level(std::size_t n, std::size_t j, const FieldPtr& field);

/// Throws InvalidArgument for an empty list or points from different fields
/// or dimensions.
Subspace span(std::span<const ProjPoint> points);

/// Orthogonal complement under sum_i v_i w_i.
Subspace dual(const Subspace& w);

bool contains(const Subspace& w, const ProjPoint& v);

/// Index of the point spanning the same line as `v` (v nonzero) in the
/// canonical list `points`. Throws InvalidArgument if not found.
std::size_t point_index(std::span<const ProjPoint> points, std::span<const FieldElement> v);

/// Number of maximal chains 0 = W_0 < W_1 < ... < W_n = GF(q)^n, found by
/// exhaustive depth-first search over one-dimensional extensions.
BigInt count_paths_bruteforce(std::size_t n, const FieldPtr& field,
                              std::uint64_t budget = kDefaultBudget);

}  // namespace qlattice
