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

// Exhaustive counters over GF(q)^n. None of them evaluates a closed form:
// each walks the objects it counts one at a time, so they serve as oracles
// for the formulas in qcount.hpp. All of them throw BudgetExceeded once more
// than `budget` candidate tests have been made.

#include <cstddef>
#include <cstdint>

#include "qlattice/bigint.hpp"
#include "qlattice/field.hpp"
#include "qlattice/lattice.hpp"

namespace qlattice {

/// n x n invertible matrices, built row by row from all nonzero vectors.
BigInt count_invertible_matrices(std::size_t n, const FieldPtr& field,
                                 std::uint64_t budget = kDefaultBudget);

/// Ordered n-tuples of projective points forming a basis.
BigInt count_ordered_bases(std::size_t n, const FieldPtr& field,
                           std::uint64_t budget = kDefaultBudget);

/// n-subsets of projective points forming a basis.
BigInt count_unordered_bases(std::size_t n, const FieldPtr& field,
                             std::uint64_t budget = kDefaultBudget);

/// Ordered (n-j)-tuples of points completing the fixed independent set
/// {e_1, ..., e_j} to a basis.
BigInt count_ordered_completions(std::size_t n, std::size_t j, const FieldPtr& field,
                                 std::uint64_t budget = kDefaultBudget);

/// Unordered (n-j)-subsets completing {e_1, ..., e_j} to a basis.
BigInt count_unordered_completions(std::size_t n, std::size_t j, const FieldPtr& field,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace qlattice
