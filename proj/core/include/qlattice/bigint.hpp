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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qlattice {

using BigInt = mpz_class;

BigInt pow(const BigInt& base, std::uint64_t exponent);
BigInt factorial(std::uint64_t n);

/// Returns num / den and throws InternalError if the division is not exact.
/// `what` names the division in the error message.
BigInt divide_exact(const BigInt& num, const BigInt& den, const char* what);

std::string to_string(const BigInt& v);
BigInt parse_bigint(const std::string& text);

}  // namespace qlattice
