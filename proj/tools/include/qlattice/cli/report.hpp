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
#include <string>
#include <vector>

#include <json.hpp>

namespace qlattice::cli {

inline constexpr const char* kVersion = "1.0.0";

/// One verified claim. Values are decimal strings (or a short rendering such
/// as "Phi(7,0,4)") so big integers survive serialization exactly. A check
/// that could not run within budget has pass == true and `computed` starting
/// with "skipped".
struct Check {
  std::string name;
  std::string predicted;
  std::string computed;
  bool pass = false;
  std::int64_t ms = 0;

  bool skipped() const { return computed.rfind("skipped", 0) == 0; }
  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::vector<Check> checks;
  /// det_exact and det_modular agreed on every determinant computed.
  bool engine_agreement = true;
  std::string version = kVersion;

  bool passed() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// JSON text with sorted keys and two-space indentation. With
/// include_timing == false every "ms" is written as 0.
std::string serialize(const VerificationReport& r, bool include_timing = true);
VerificationReport parse_report(const std::string& text);

}  // namespace qlattice::cli
