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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlattice/bigint.hpp"

namespace qlattice {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t dim);
  /// J, the all-ones matrix.
  static IntMatrix ones(std::size_t dim);

  std::size_t dim() const { return dim_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::span<const BigInt> row(std::size_t i) const { return {entries_.data() + i * dim_, dim_}; }
  std::span<const BigInt> entries() const { return entries_; }

  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator*(const BigInt& s, const IntMatrix& m);

/// Exact product. Uses 64-bit accumulation when the entry sizes prove it
/// cannot overflow. Throws InvalidArgument on a dimension mismatch.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// The nu x nu matrix with alpha on the diagonal and beta elsewhere.
struct PhiSpec {
  std::size_t nu = 1;
  BigInt alpha;
  BigInt beta;

  friend bool operator==(const PhiSpec&, const PhiSpec&) = default;
};

std::string to_string(const PhiSpec& s);

IntMatrix phi_matrix(const PhiSpec& spec);

/// The PhiSpec `m` equals, if any. A 1 x 1 matrix reports beta = 0.
std::optional<PhiSpec> mat_is_phi(const IntMatrix& m);

/// Text format: a line with the dimension, then one line per row with the
/// entries in decimal separated by single spaces.
void write_matrix(std::ostream& out, const IntMatrix& m);
/// Throws InvalidArgument on malformed input.
IntMatrix read_matrix(std::istream& in);

}  // namespace qlattice
