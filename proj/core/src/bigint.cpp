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

#include "qlattice/bigint.hpp"

#include "qlattice/error.hpp"

namespace qlattice {

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt divide_exact(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw InternalError(std::string("division by zero in ") + what);
  BigInt quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) {
    throw InternalError(std::string("inexact division in ") + what + ": " + num.get_str() +
                        " / " + den.get_str());
  }
  return quot;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw InvalidArgument("not a decimal integer: '" + text + "'");
  }
  return out;
}

}  // namespace qlattice
