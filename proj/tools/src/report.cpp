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

#include "qlattice/cli/report.hpp"
#include <algorithm>

#include "qlattice/error.hpp"
#include <algorithm>

namespace qlattice::cli {

bool VerificationReport::passed() const {
  return engine_agreement && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void to_json(nlohmann::json& j, const Check& c) {
  j = nlohmann::json{{"name", c.name}, {"predicted", c.predicted}, {"computed", c.computed},
                     {"pass", c.pass}, {"ms", c.ms}};
}

void from_json(const nlohmann::json& j, Check& c) {
  j.at("name").get_to(c.name);
  j.at("predicted").get_to(c.predicted);
  j.at("computed").get_to(c.computed);
  j.at("pass").get_to(c.pass);
  j.at("ms").get_to(c.ms);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"params", {{"n", r.n}, {"q", r.q}}},
                     {"checks", r.checks},
                     {"engine_agreement", r.engine_agreement},
                     {"version", r.version}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("params").at("n").get_to(r.n);
  j.at("params").at("q").get_to(r.q);
  j.at("checks").get_to(r.checks);
  j.at("engine_agreement").get_to(r.engine_agreement);
  j.at("version").get_to(r.version);
}

std::string serialize(const VerificationReport& r, bool include_timing) {
  nlohmann::json j = r;
  if (!include_timing) {
    for (auto& c : j["checks"]) c["ms"] = 0;
  }
  return j.dump(2) + "\n";
}

VerificationReport parse_report(const std::string& text) {
  try {
    return nlohmann::json::parse(text).get<VerificationReport>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qlattice::cli
