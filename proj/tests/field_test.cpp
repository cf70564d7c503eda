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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qlattice/error.hpp"
#include "qlattice/field.hpp"

namespace qlattice {
namespace {

TEST(Field, PrimeFieldArithmetic) {
  const auto f = Field::of_order(7);
  EXPECT_EQ(f->characteristic(), 7u);
  EXPECT_EQ(f->degree(), 1u);
  EXPECT_TRUE(f->modulus().empty());
  EXPECT_EQ(f->add(f->element(5), f->element(4)).rep, 2u);
  EXPECT_EQ(f->mul(f->element(5), f->element(4)).rep, 6u);
  EXPECT_EQ(f->neg(f->element(3)).rep, 4u);
  EXPECT_EQ(f->inv(f->element(3)).rep, 5u);
  EXPECT_EQ(f->pow(f->element(3), 6).rep, 1u);
}

TEST(Field, DefiningPolynomials) {
  EXPECT_EQ(Field::of_order(4)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(Field::of_order(8)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(Field::of_order(9)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::of_order(16)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
}

TEST(Field, Gf4MultiplicationTable) {
  // Elements 0, 1, x, x+1 with x^2 = x + 1.
  const auto f = Field::of_order(4);
  const std::uint32_t expected[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) EXPECT_EQ(f->mul(f->element(a), f->element(b)).rep, expected[a][b]);
  EXPECT_EQ(f->add(f->element(2), f->element(3)).rep, 1u);
}

TEST(Field, BinaryExtensionsMatchCarrylessOracle) {
  for (unsigned k : {2u, 3u, 4u, 5u, 8u, 10u, 12u, 14u}) {
    const auto f = Field::make(2, k);
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < f->modulus().size(); ++i) bits |= f->modulus()[i] << i;
    std::mt19937 rng(k);
    std::uniform_int_distribution<std::uint32_t> dist(0, f->order() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto a = dist(rng), b = dist(rng);
      ASSERT_EQ(f->mul(f->element(a), f->element(b)).rep, oracle::gf2_mul(a, b, bits, k)) << "k=" << k;
      ASSERT_EQ(f->add(f->element(a), f->element(b)).rep, a ^ b);
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, HoldOnSamples) {
  const auto f = Field::of_order(GetParam());
  const std::uint32_t q = f->order();
  std::mt19937 rng(q);
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto a = f->element(dist(rng)), b = f->element(dist(rng)), c = f->element(dist(rng));
    ASSERT_EQ(f->add(a, b), f->add(b, a));
    ASSERT_EQ(f->mul(a, b), f->mul(b, a));
    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    ASSERT_EQ(f->add(a, f->neg(a)), f->zero());
    ASSERT_EQ(f->sub(f->add(a, b), b), a);
    if (a != f->zero()) {
      ASSERT_EQ(f->mul(a, f->inv(a)), f->one());
      ASSERT_EQ(f->pow(a, q - 1), f->one());
    }
  }
}

class SmallFieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(SmallFieldAxioms, NoZeroDivisorsAndFullGroup) {
  const auto f = Field::of_order(GetParam());
  const std::uint32_t q = f->order();
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b) ASSERT_NE(f->mul(f->element(a), f->element(b)), f->zero());
  // Some element generates the whole multiplicative group.
  bool found = false;
  for (std::uint32_t g = 1; g < q && !found; ++g) {
    std::uint32_t order = 1;
    auto x = f->element(g);
    while (x != f->one()) {
      x = f->mul(x, f->element(g));
      ++order;
    }
    found = order == q - 1;
  }
  EXPECT_TRUE(found);
}

INSTANTIATE_TEST_SUITE_P(Orders, FieldAxioms,
                         ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 125u, 256u, 4096u, 6561u,
                                           8192u, 65537u, 1048573u));
INSTANTIATE_TEST_SUITE_P(Orders, SmallFieldAxioms,
                         ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u, 125u, 256u));

TEST(Field, TablesOnlyForSmallOrders) {
  EXPECT_TRUE(Field::of_order(4096)->uses_tables());
  EXPECT_FALSE(Field::of_order(65537)->uses_tables());
}

TEST(Field, Equality) {
  EXPECT_EQ(*Field::of_order(9), *Field::make(3, 2));
  EXPECT_FALSE(*Field::of_order(9) == *Field::of_order(8));
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(Field::of_order(6), InvalidArgument);
  EXPECT_THROW(Field::of_order(1), InvalidArgument);
  EXPECT_THROW(Field::of_order(0), InvalidArgument);
  EXPECT_THROW(Field(4, 1), InvalidArgument);
  EXPECT_THROW(Field(2, 0), InvalidArgument);
  EXPECT_THROW(Field(2, 21), InvalidArgument);
  const auto f = Field::of_order(5);
  EXPECT_THROW(f->element(5), InvalidArgument);
  EXPECT_THROW(f->inv(f->zero()), InvalidArgument);
}

TEST(Field, IsPrime) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
  EXPECT_TRUE(is_prime(1048573));
}

}  // namespace
}  // namespace qlattice
