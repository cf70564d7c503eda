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

#include "qlattice/brute_force.hpp"

#include <string>

#include "independent_walk.hpp"
#include "qlattice/error.hpp"

namespace qlattice {

namespace {

std::vector<Vec> point_vectors(std::size_t n, const FieldPtr& field) {
  std::vector<Vec> out;
  for (auto& p : enum_points(n, field)) out.push_back(std::move(p.coords));
  return out;
}

BigInt completions(std::size_t n, std::size_t j, const FieldPtr& field, std::uint64_t budget,
                   bool ordered) {
  if (j > n) throw InvalidArgument("fixed set larger than the dimension");
  detail::IndependentWalker walker(*field, n, point_vectors(n, field), budget);
  for (std::size_t i = 0; i < j; ++i) {
    Vec e(n);
    e[i] = field->one();
    walker.fix(e);
  }
  return walker.count(n - j, !ordered);
}

}  // namespace

BigInt count_invertible_matrices(std::size_t n, const FieldPtr& field, std::uint64_t budget) {
  std::vector<Vec> rows;
  const std::uint64_t size = [&] {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < n; ++i) s *= field->order();
    return s;
  }();
  enum_points(n, field);  // dimension and size checks
  for (std::uint64_t code = 1; code < size; ++code) rows.push_back(vector_from_code(*field, n, code));
  detail::IndependentWalker walker(*field, n, std::move(rows), budget);
  return walker.count(n, false);
}

BigInt count_ordered_bases(std::size_t n, const FieldPtr& field, std::uint64_t budget) {
  return completions(n, 0, field, budget, true);
}

BigInt count_unordered_bases(std::size_t n, const FieldPtr& field, std::uint64_t budget) {
  return completions(n, 0, field, budget, false);
}

BigInt count_ordered_completions(std::size_t n, std::size_t j, const FieldPtr& field,
                                 std::uint64_t budget) {
  return completions(n, j, field, budget, true);
}

BigInt count_unordered_completions(std::size_t n, std::size_t j, const FieldPtr& field,
                                   std::uint64_t budget) {
  return completions(n, j, field, budget, false);
}

}  // namespace qlattice
