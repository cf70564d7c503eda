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

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace qlattice {

/// An element of GF(q). For q = p^k the representation is the base-p digit
/// vector of the polynomial residue: rep = c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
struct FieldElement {
  std::uint32_t rep = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic context for GF(p^k), p^k <= 2^20.
///
/// Extension fields use the smallest monic irreducible polynomial of degree k,
/// where polynomials are ordered by the integer value of their non-leading
/// coefficient digits (x^{k-1} most significant). For every q <= 4096
/// multiplication and inversion go through exp/log tables built from a
/// primitive element; larger fields fall back to polynomial arithmetic.
///
/// A Field is immutable after construction, so one instance can be shared
/// freely across threads.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;
  static constexpr std::uint32_t kTableLimit = 4096;

  /// Throws InvalidArgument for composite p, k == 0 or p^k > kMaxOrder.
  Field(std::uint32_t p, unsigned k = 1);

  static std::shared_ptr<const Field> make(std::uint32_t p, unsigned k = 1) {
    return std::make_shared<const Field>(p, k);
  }

  /// GF(q) for a prime power q; throws InvalidArgument otherwise.
  static std::shared_ptr<const Field> of_order(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }

  /// Coefficients c_0..c_k of the defining polynomial (c_k == 1). Empty for
  /// prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool uses_tables() const { return !exp_.empty(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Throws InvalidArgument if rep >= q.
  FieldElement element(std::uint32_t rep) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws InvalidArgument for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  bool operator==(const Field& other) const { return p_ == other.p_ && k_ == other.k_; }

 private:
  FieldElement poly_mul(FieldElement a, FieldElement b) const;
  FieldElement digit_add(FieldElement a, FieldElement b) const;
  void build_tables();

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;  // length q, log_[0] unused
  std::vector<std::uint16_t> add_;  // q*q, extension fields with q <= 256
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

}  // namespace qlattice
